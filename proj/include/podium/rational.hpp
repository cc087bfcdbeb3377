#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace podium {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// base^e for a non-negative integer exponent
inline Rat rat_pow(Rat base, unsigned e) {
    Rat out = 1;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

/// floor(q) as a big integer
inline BigInt rat_floor(const Rat& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt quot = n / d;
    if (n < 0 && quot * d != n) --quot;
    return quot;
}

/// Parses "7", "-4.25" or "13/10" into an exact rational.
inline Rat rat_from_string(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        try {
            Rat d{BigInt(den)};
            if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
            return Rat(BigInt(num)) / d;
        } catch (const std::runtime_error&) {
            throw bad();
        }
    }
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string ipart = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fpart = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (ipart.empty() && fpart.empty()) throw bad();
    for (char c : ipart + fpart)
        if (c < '0' || c > '9') throw bad();
    Rat value{ipart.empty() ? BigInt(0) : BigInt(ipart)};
    if (!fpart.empty()) {
        BigInt scale = 1;
        for (size_t i = 0; i < fpart.size(); ++i) scale *= 10;
        value += Rat(BigInt(fpart), scale);
    }
    return neg ? -value : value;
}

/// Nearest rational by continued-fraction expansion, stopping once the
/// relative error drops below rel_tol.
inline Rat rat_from_double(double x, double rel_tol = 1e-12) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot rationalize a non-finite value");
    if (x == 0.0) return Rat(0);
    bool neg = x < 0;
    double target = std::fabs(x);
    // convergents h/k of the continued fraction of target
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double frac = target;
    for (int iter = 0; iter < 64; ++iter) {
        double ai = std::floor(frac);
        if (ai > 9e18) break;
        BigInt a{static_cast<long long>(ai)};
        BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        Rat approx(h1, k1);
        if (std::fabs(to_double(approx) - target) <= rel_tol * target) break;
        double rem = frac - ai;
        if (rem <= 0) break;
        frac = 1.0 / rem;
    }
    Rat out(h1, k1);
    return neg ? -out : out;
}

/// "p/q" for non-integers, plain digits otherwise
inline std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace podium
