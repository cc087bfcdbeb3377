#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace podium {

/// Risk attitude of the organiser objective; must be positive. Values above 1
/// reward outliers, exactly 1 is the plain sum, below 1 punishes them.
struct Lambda {
    double value;
    explicit Lambda(double v) : value(v) {
        if (!std::isfinite(v) || v <= 0) throw std::invalid_argument("lambda must be positive");
    }
};

/// Order-independent float sum (recursive halving); keeps results stable to
/// ~1e-12 regardless of evaluation order.
inline double pairwise_sum(const double* xs, size_t n) {
    if (n <= 8) {
        double s = 0;
        for (size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    size_t half = n / 2;
    return pairwise_sum(xs, half) + pairwise_sum(xs + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& xs) {
    return pairwise_sum(xs.data(), xs.size());
}

/// Exponential quality of a performance vector.
inline double quality(const std::vector<double>& x, Lambda lambda) {
    std::vector<double> terms;
    terms.reserve(x.size());
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite performance value");
        if (lambda.value > 1) terms.push_back(std::pow(lambda.value, v));
        else if (lambda.value == 1) terms.push_back(v);
        else terms.push_back(-std::pow(lambda.value, v));
    }
    return pairwise_sum(terms);
}

/// Cardinal results: one vector per race, ordered best-to-worst by finishing
/// position. An optional top-k cutoff drops everything below position k.
class PerformanceTable {
public:
    explicit PerformanceTable(std::vector<std::vector<double>> races,
                              std::optional<int> top_k = std::nullopt)
        : races_(std::move(races)), top_k_(top_k) {
        if (top_k_ && *top_k_ < 2)
            throw std::invalid_argument("truncation must keep at least 2 positions");
        for (size_t i = 0; i < races_.size(); ++i) {
            auto& race = races_[i];
            if (top_k_ && static_cast<int>(race.size()) > *top_k_) race.resize(*top_k_);
            if (race.size() < 2)
                throw std::invalid_argument("race " + std::to_string(i + 1) +
                                            " has fewer than 2 performances");
            for (double v : race)
                if (!std::isfinite(v))
                    throw std::invalid_argument("non-finite performance in race " +
                                                std::to_string(i + 1));
        }
    }

    const std::vector<std::vector<double>>& races() const { return races_; }
    std::optional<int> truncation() const { return top_k_; }

private:
    std::vector<std::vector<double>> races_;
    std::optional<int> top_k_;
};

/// Position scores that maximize expected overall quality: the per-position
/// mean of each race's quality order statistics (largest first).
inline std::vector<double> optimal_scores(const PerformanceTable& perf, Lambda lambda) {
    if (perf.races().empty()) throw std::invalid_argument("empty performance table");
    const size_t k = perf.races().front().size();
    for (const auto& race : perf.races())
        if (race.size() != k)
            throw std::invalid_argument("ragged race lengths (" + std::to_string(race.size()) +
                                        " vs " + std::to_string(k) + ")");
    std::vector<std::vector<double>> per_position(k);
    for (auto& column : per_position) column.reserve(perf.races().size());
    for (const auto& race : perf.races()) {
        std::vector<double> u;
        u.reserve(k);
        for (double v : race) {
            if (lambda.value > 1) u.push_back(std::pow(lambda.value, v));
            else if (lambda.value == 1) u.push_back(v);
            else u.push_back(-std::pow(lambda.value, v));
        }
        std::sort(u.begin(), u.end(), std::greater<>());
        for (size_t j = 0; j < k; ++j) per_position[j].push_back(u[j]);
    }
    std::vector<double> s(k);
    for (size_t j = 0; j < k; ++j)
        s[j] = pairwise_sum(per_position[j]) / static_cast<double>(perf.races().size());
    return s;
}

/// Affine rescale: first score to 100, last to 0.
inline std::vector<double> normalize(const std::vector<double>& s) {
    if (s.size() < 2) throw std::invalid_argument("cannot normalize fewer than 2 scores");
    const double hi = s.front(), lo = s.back();
    if (!(hi > lo))
        throw std::invalid_argument("cannot normalize: first score must exceed the last");
    std::vector<double> out;
    out.reserve(s.size());
    for (double v : s) out.push_back(100.0 * (v - lo) / (hi - lo));
    return out;
}

struct FitResult {
    double p = 0;
    double objective = 0;
};

namespace detail {

/// Pairwise objective sum_{j != z} (s_j - s_z - g_j + g_z)^2 collapsed to
/// 2m*sum(d^2) - 2*sum(d)^2 with d = s - g, both normalized to [0, 1].
inline double fit_objective(const std::vector<double>& shat, double lnp) {
    const size_t m = shat.size();
    std::vector<double> d(m), d2(m);
    const double den = std::expm1(static_cast<double>(m - 1) * lnp);
    for (size_t j = 0; j < m; ++j) {
        double g;
        if (lnp == 0.0) g = static_cast<double>(m - 1 - j) / static_cast<double>(m - 1);
        else g = std::expm1(static_cast<double>(m - 1 - j) * lnp) / den;
        d[j] = shat[j] - g;
        d2[j] = d[j] * d[j];
    }
    const double sd = pairwise_sum(d), sd2 = pairwise_sum(d2);
    return 2.0 * static_cast<double>(m) * sd2 - 2.0 * sd * sd;
}

}  // namespace detail

/// Best geometric parameter for a score vector: coarse log-grid scan, then
/// golden-section refinement; the refined value never loses to the grid.
inline FitResult fit_geometric(const std::vector<double>& s, double p_lo = 0.01,
                               double p_hi = 100.0, int grid_points = 2000) {
    if (s.size() < 3) throw std::invalid_argument("need at least 3 scores to fit");
    for (size_t j = 1; j < s.size(); ++j)
        if (s[j] > s[j - 1])
            throw std::invalid_argument("non-monotone input: scores must be non-increasing");
    if (!(s.front() > s.back()))
        throw std::invalid_argument("cannot fit a constant score vector");
    if (!(p_lo > 0) || !(p_hi > p_lo)) throw std::invalid_argument("invalid parameter bounds");
    if (grid_points < 2) throw std::invalid_argument("grid needs at least 2 points");

    std::vector<double> shat;
    shat.reserve(s.size());
    for (double v : s) shat.push_back((v - s.back()) / (s.front() - s.back()));

    const double lo = std::log(p_lo), hi = std::log(p_hi);
    auto at = [&](int i) { return lo + (hi - lo) * i / (grid_points - 1); };
    int best_i = 0;
    double best_f = detail::fit_objective(shat, at(0));
    for (int i = 1; i < grid_points; ++i) {
        double f = detail::fit_objective(shat, at(i));
        if (f < best_f) { best_f = f; best_i = i; }
    }

    double a = at(std::max(best_i - 1, 0));
    double b = at(std::min(best_i + 1, grid_points - 1));
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = detail::fit_objective(shat, c), fd = detail::fit_objective(shat, d);
    while (std::fabs(b - a) > 1e-6) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = detail::fit_objective(shat, c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = detail::fit_objective(shat, d);
        }
    }
    double t = (a + b) / 2;
    double f = detail::fit_objective(shat, t);
    if (best_f < f) { t = at(best_i); f = best_f; }
    return {std::exp(t), f};
}

/// Transfers a risk attitude between disciplines with different winning
/// records: target lambda = ref_lambda^(ref_record / target_record).
inline Lambda calibrate_lambda(double ref_record, Lambda ref_lambda, double target_record) {
    if (!(ref_record > 0) || !(target_record > 0))
        throw std::invalid_argument("records must be positive");
    if (!(ref_lambda.value > 1))
        throw std::invalid_argument("reference lambda must exceed 1");
    return Lambda(std::pow(ref_lambda.value, ref_record / target_record));
}

}  // namespace podium
