#pragma once

#include "podium/core.hpp"
#include "podium/rational.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace podium {

/// Parameter of the geometric family. Zero and Infinity are the lexicographic
/// edge members (generalised antiplurality / plurality); Finite(1) is Borda.
class GeometricParam {
public:
    enum class Kind { Zero, Finite, Infinity };

    static GeometricParam zero() { return GeometricParam(Kind::Zero, Rat(0)); }
    static GeometricParam infinity() { return GeometricParam(Kind::Infinity, Rat(0)); }
    static GeometricParam finite(Rat p) {
        if (p <= 0) throw std::invalid_argument("geometric parameter must be positive");
        return GeometricParam(Kind::Finite, std::move(p));
    }

    /// "0" → Zero, "inf"/"infinity"/"∞" → Infinity, anything else is parsed
    /// as an exact rational ("2", "0.5", "3/2").
    static GeometricParam parse(const std::string& text) {
        std::string low;
        for (char c : text) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (low == "inf" || low == "infinity" || low == "∞") return infinity();
        Rat p = rat_from_string(text);
        if (p == 0) return zero();
        if (p < 0) throw std::invalid_argument("geometric parameter must be non-negative");
        return finite(std::move(p));
    }

    Kind kind() const { return kind_; }
    const Rat& value() const {
        if (kind_ != Kind::Finite)
            throw std::logic_error("parameter has no finite value");
        return p_;
    }

    /// p ↦ 1/p; swaps the Zero and Infinity edges. Reversing every race and
    /// aggregating with the reciprocal parameter reverses the ranking.
    GeometricParam reciprocal() const {
        switch (kind_) {
            case Kind::Zero: return infinity();
            case Kind::Infinity: return zero();
            default: return finite(Rat(1) / p_);
        }
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Zero: return "0";
            case Kind::Infinity: return "inf";
            default: return rat_to_string(p_);
        }
    }

    bool operator==(const GeometricParam&) const = default;

private:
    GeometricParam(Kind kind, Rat p) : kind_(kind), p_(std::move(p)) {}

    Kind kind_;
    Rat p_;  // meaningful only for Finite
};

/// How a table's vector for a smaller field derives from the one it stores:
/// keep the first k entries, keep the last k, or re-evaluate a formula.
enum class TrimPolicy { FromBottom, FromTop, Formula };

/// Scores for every field size k up to a maximum, with one or more
/// tie-breaking rounds per size. Immutable once built.
class ScoreTable {
public:
    /// Geometric family table. The cap bounds exponent growth for exact
    /// arithmetic; raise it explicitly for unusually large fields.
    static ScoreTable geometric(GeometricParam param, int max_size, int cap = 64) {
        if (max_size < 1) throw std::invalid_argument("field size must be at least 1");
        if (max_size > cap)
            throw std::invalid_argument("field size " + std::to_string(max_size) +
                                        " exceeds the score cap " + std::to_string(cap));
        ScoreTable t;
        t.max_size_ = max_size;
        t.param_ = param;
        t.policy_ = TrimPolicy::Formula;
        return t;
    }

    /// Fixed score vector for the largest field; smaller fields trim it.
    static ScoreTable custom(std::vector<Rat> scores, TrimPolicy policy) {
        if (scores.empty()) throw std::invalid_argument("custom table needs at least one score");
        if (policy == TrimPolicy::Formula)
            throw std::invalid_argument("formula trimming is reserved for geometric tables");
        for (size_t j = 1; j < scores.size(); ++j)
            if (scores[j - 1] < scores[j])
                throw std::invalid_argument("custom scores must be non-increasing");
        ScoreTable t;
        t.max_size_ = static_cast<int>(scores.size());
        t.scores_ = std::move(scores);
        t.policy_ = policy;
        return t;
    }

    /// Same table with an extra final round of (1,0,…,0): ties on points go
    /// to the athlete with more race wins.
    ScoreTable with_plurality_tiebreak() const {
        ScoreTable t = *this;
        t.plurality_tiebreak_ = true;
        return t;
    }

    int max_size() const { return max_size_; }
    TrimPolicy trim_policy() const { return policy_; }
    const std::optional<GeometricParam>& geometric_param() const { return param_; }
    bool has_plurality_tiebreak() const { return plurality_tiebreak_; }

    int rounds(int k) const {
        check_size(k);
        int base = 1;
        if (param_ && param_->kind() != GeometricParam::Kind::Finite) base = k - 1;
        return base + (plurality_tiebreak_ ? 1 : 0);
    }

    std::vector<Rat> round_vector(int k, int r) const {
        check_size(k);
        if (r < 0 || r >= rounds(k))
            throw std::out_of_range("round " + std::to_string(r + 1) + " of " +
                                    std::to_string(rounds(k)) + " for field size " +
                                    std::to_string(k));
        if (plurality_tiebreak_ && r == rounds(k) - 1) return ones_then_zeros(k, 1);
        if (!param_) {
            std::vector<Rat> v(k);
            for (int j = 0; j < k; ++j) {
                size_t src = policy_ == TrimPolicy::FromTop ? scores_.size() - k + j : j;
                v[j] = scores_[src];
            }
            return v;
        }
        switch (param_->kind()) {
            case GeometricParam::Kind::Infinity:
                return ones_then_zeros(k, r + 1);
            case GeometricParam::Kind::Zero:
                return ones_then_zeros(k, k - 1 - r);
            default: {
                const Rat& p = param_->value();
                std::vector<Rat> v(k);
                for (int j = 0; j < k; ++j) {
                    unsigned e = static_cast<unsigned>(k - 1 - j);
                    if (p > 1) v[j] = rat_pow(p, e);
                    else if (p == 1) v[j] = Rat(e);
                    else v[j] = 1 - rat_pow(p, e);
                }
                return v;
            }
        }
        throw std::logic_error("unreachable");
    }

private:
    ScoreTable() = default;

    void check_size(int k) const {
        if (k < 1 || k > max_size_)
            throw std::invalid_argument("score table has no vector for field size " +
                                        std::to_string(k) + " (max " +
                                        std::to_string(max_size_) + ")");
    }

    static std::vector<Rat> ones_then_zeros(int k, int ones) {
        std::vector<Rat> v(k, Rat(0));
        for (int j = 0; j < ones && j < k; ++j) v[j] = 1;
        return v;
    }

    int max_size_ = 0;
    std::optional<GeometricParam> param_;
    std::vector<Rat> scores_;  // custom tables only, at max_size_
    TrimPolicy policy_ = TrimPolicy::Formula;
    bool plurality_tiebreak_ = false;
};

/// One-shot score vector for a finite parameter at field size k. The
/// extremes have no single vector (they score through tie-break rounds), so
/// they are rejected here; build a ScoreTable for those.
inline std::vector<Rat> geometric_scores(GeometricParam param, int k, int cap = 64) {
    if (param.kind() != GeometricParam::Kind::Finite)
        throw std::invalid_argument("geometric_scores needs a finite parameter");
    return ScoreTable::geometric(param, k, cap).round_vector(k, 0);
}

template <typename R>
bool strictly_decreasing(const std::vector<R>& v) {
    for (size_t j = 1; j < v.size(); ++j)
        if (!(v[j - 1] > v[j])) return false;
    return true;
}

/// Outcome of a linear-equivalence test: when equivalent, s = alpha·t + beta
/// with alpha > 0.
template <typename R>
struct LinearEquivResult {
    bool equivalent = false;
    R alpha{};
    R beta{};
    explicit operator bool() const { return equivalent; }
};

using LinearEquiv = LinearEquivResult<Rat>;

/// Exact test: do s and t induce the same rule? Constant pairs are
/// equivalent; a constant against a non-constant is not (alpha must be > 0).
inline LinearEquivResult<Rat> linear_equiv(const std::vector<Rat>& s, const std::vector<Rat>& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("vector lengths differ (" + std::to_string(s.size()) +
                                    " vs " + std::to_string(t.size()) + ")");
    if (s.size() < 2) throw std::invalid_argument("need at least two scores");
    size_t j = 0;
    for (size_t i = 1; i < t.size(); ++i)
        if (t[i] != t[0]) { j = i; break; }
    if (j == 0) {  // t constant
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] != s[0]) return {};
        return {true, Rat(1), s[0] - t[0]};
    }
    Rat alpha = (s[0] - s[j]) / (t[0] - t[j]);
    if (alpha <= 0) return {};
    Rat beta = s[0] - alpha * t[0];
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != alpha * t[i] + beta) return {};
    return {true, std::move(alpha), std::move(beta)};
}

/// Float variant: solve alpha, beta from the coordinates with the widest
/// spread in t, then accept if every residual is within a relative 1e-9.
inline LinearEquivResult<double> linear_equiv(const std::vector<double>& s,
                                              const std::vector<double>& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("vector lengths differ (" + std::to_string(s.size()) +
                                    " vs " + std::to_string(t.size()) + ")");
    if (s.size() < 2) throw std::invalid_argument("need at least two scores");
    double scale = 1.0;
    for (double x : s) scale = std::max(scale, std::fabs(x));
    const double tol = 1e-9 * scale;

    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < t.size(); ++i) {
        if (t[i] < t[lo]) lo = i;
        if (t[i] > t[hi]) hi = i;
    }
    if (t[lo] == t[hi]) {  // t constant
        for (size_t i = 1; i < s.size(); ++i)
            if (std::fabs(s[i] - s[0]) > tol) return {};
        return {true, 1.0, s[0] - t[0]};
    }
    double alpha = (s[hi] - s[lo]) / (t[hi] - t[lo]);
    if (alpha <= 0) return {};
    double beta = s[hi] - alpha * t[hi];
    for (size_t i = 0; i < s.size(); ++i)
        if (std::fabs(s[i] - (alpha * t[i] + beta)) > tol) return {};
    return {true, alpha, beta};
}

/// Per-size verdicts on whether dropping the bottom (or top) of the field
/// keeps the round-1 scores linearly equivalent to the table's own k-vector.
struct IndependenceEntry {
    int k = 0;
    bool loser_independent = false;
    bool winner_independent = false;
};

inline std::vector<IndependenceEntry> independence_by_size(const ScoreTable& table, int m) {
    if (m < 2) throw std::invalid_argument("field size must be at least 2");
    if (m > table.max_size())
        throw std::invalid_argument("score table has no vector for field size " +
                                    std::to_string(m) + " (max " +
                                    std::to_string(table.max_size()) + ")");
    const std::vector<Rat> sm = table.round_vector(m, 0);
    const bool strict = strictly_decreasing(sm);
    std::vector<IndependenceEntry> report;
    for (int k = 2; k <= m; ++k) {
        const std::vector<Rat> sk = table.round_vector(k, 0);
        std::vector<Rat> prefix(sm.begin(), sm.begin() + k);
        std::vector<Rat> suffix(sm.end() - k, sm.end());
        IndependenceEntry e;
        e.k = k;
        e.loser_independent = strict && linear_equiv(sk, prefix).equivalent;
        e.winner_independent = strict && linear_equiv(sk, suffix).equivalent;
        report.push_back(e);
    }
    return report;
}

}  // namespace podium
