#pragma once

#include "podium/axioms.hpp"
#include "podium/core.hpp"
#include "podium/rational.hpp"
#include "podium/rules.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace podium {

/// A concrete profile plus the recomputed aggregation that establishes the
/// claim. Verification always goes through aggregate() on the emitted
/// profile; none of the construction-time arithmetic is reused.
struct Witness {
    Profile profile;
    std::string claim;
    TotalRanking<Rat> verification;
    std::optional<Profile> reduced_profile;
    std::optional<TotalRanking<Rat>> reduced_verification;
};

/// Requested counterexample cannot exist (the rule satisfies the axiom).
struct no_witness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest-denominator rational strictly inside (lo, hi); an empty hi means
/// the interval is unbounded above. Classic Stern-Brocot descent.
inline Rat sb_between(const Rat& lo, const std::optional<Rat>& hi) {
    if (hi && *hi <= lo) throw std::invalid_argument("empty interval");
    Rat z{rat_floor(lo) + 1};
    if (!hi || z < *hi) return z;
    Rat a{rat_floor(lo)};
    Rat next_lo = 1 / (*hi - a);
    std::optional<Rat> next_hi;
    if (lo != a) next_hi = 1 / (lo - a);
    return a + 1 / sb_between(next_lo, next_hi);
}

inline Rat sb_between(const Rat& lo, const Rat& hi) {
    return sb_between(lo, std::optional<Rat>(hi));
}

/// Exact rationals for a table supplied as floats, suitable for witness
/// construction; each entry is within a relative 1e-12 of the original.
inline std::vector<Rat> rationalize_scores(const std::vector<double>& scores) {
    std::vector<Rat> out;
    out.reserve(scores.size());
    for (double s : scores) out.push_back(rat_from_double(s, 1e-12));
    return out;
}

namespace detail {

inline std::string two_digit(const std::string& prefix, int i) {
    return prefix + (i < 10 ? "0" : "") + std::to_string(i);
}

inline void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("witness failed its own verification: ") + what);
}

}  // namespace detail

/// A profile on which the overall winner never wins a race: the favourite
/// finishes second everywhere while each rival takes each remaining position
/// exactly once.
inline Witness no_race_win_winner(const GeometricParam& param, int m) {
    if (param.kind() != GeometricParam::Kind::Finite)
        throw std::invalid_argument("construction needs a finite parameter");
    const Rat& p = param.value();
    if (p < 1 && m < 3)
        throw std::invalid_argument("with p < 1 the construction needs at least 3 athletes");
    if (p == 1 && m < 4)
        throw std::invalid_argument(
            "with p = 1 the construction needs at least 4 athletes (three always tie)");
    if (p > 1) {
        if (m < 3)
            throw std::invalid_argument("with p > 1 the construction needs at least 3 athletes");
        Rat bound = p * p / (p - 1);
        if (Rat(m) <= bound)
            throw std::invalid_argument("with p > 1 the construction needs more than p^2/(p-1) = " +
                                        rat_to_string(bound) + " athletes, got " +
                                        std::to_string(m));
    }

    const int n = m - 1;
    Athlete star{"a"};
    std::vector<Athlete> rivals;
    for (int i = 1; i <= n; ++i) rivals.push_back({detail::two_digit("b", i)});

    std::vector<int> allowed;  // 0-based positions every rival cycles through
    allowed.push_back(0);
    for (int pos = 2; pos < m; ++pos) allowed.push_back(pos);

    std::vector<RaceRanking> races(n);
    for (int i = 0; i < n; ++i) {
        races[i].order.assign(m, Athlete{});
        races[i].order[1] = star;
        for (int j = 0; j < n; ++j)
            races[i].order[allowed[((j - i) % n + n) % n]] = rivals[j];
    }
    std::vector<Athlete> roster = rivals;
    roster.push_back(star);
    Profile profile(std::move(roster), std::move(races));

    auto verification = aggregate(profile, ScoreTable::geometric(param, m));
    detail::require(verification.top().size() == 1 && verification.top().front() == star,
                    "favourite is not the unique winner");
    int star_firsts = 0;
    for (const auto& race : profile.races())
        if (race.order.front() == star) ++star_firsts;
    detail::require(star_firsts == 0, "favourite won a race");
    for (const auto& r : rivals) {
        int c = 0;
        for (const auto& race : profile.races())
            if (race.order.front() == r) ++c;
        detail::require(c == 1, "a rival does not win exactly once");
    }

    Witness w{std::move(profile),
              "athlete a tops the overall ranking with p = " + param.to_string() +
                  " despite winning none of the " + std::to_string(n) + " races",
              std::move(verification),
              std::nullopt,
              std::nullopt};
    return w;
}

/// Smallest n with n * ((k-2)p^k - kp^{k-1} + kp - k + 2) > (p^{k-1} - 1)(p - 1).
inline BigInt majority_loser_block_count(const Rat& p, int k) {
    Rat cost = (k - 2) * rat_pow(p, static_cast<unsigned>(k)) -
               k * rat_pow(p, static_cast<unsigned>(k - 1)) + k * p - k + 2;
    Rat rhs = (rat_pow(p, static_cast<unsigned>(k - 1)) - 1) * (p - 1);
    if (cost <= 0) throw std::logic_error("block-count polynomial not positive");
    BigInt n = rat_floor(rhs / cost) + 1;
    if (!(n * cost > rhs) || ((n - 1) * cost > rhs))
        throw std::logic_error("block count is not minimal");
    return n;
}

/// A profile whose majority loser (last in over half the races) still ends up
/// strictly ahead of the athlete everyone agreed was better.
inline Witness majority_loser_first(const Rat& p, int k) {
    if (!(p > 1)) throw std::invalid_argument("construction needs p > 1");
    if (k < 3) throw std::invalid_argument("construction needs at least 3 athletes");

    BigInt nk_big = majority_loser_block_count(p, k);
    if (nk_big > 1'000'000)
        throw std::invalid_argument("construction would need " + nk_big.str() +
                                    " blocks; parameter too close to 1");
    const long long nk = nk_big.convert_to<long long>();

    std::vector<Athlete> names;
    for (int i = 1; i <= k; ++i) names.push_back({detail::two_digit("a", i)});
    const Athlete loser = names.back();

    std::vector<RaceRanking> races;
    for (long long t = 0; t < nk * (k - 1); ++t) {
        RaceRanking race;
        race.order.assign(k, Athlete{});
        race.order[0] = loser;
        for (int j = 0; j < k - 1; ++j) race.order[1 + (j + t) % (k - 1)] = names[j];
        races.push_back(std::move(race));
    }
    for (long long t = 0; t < nk * (k - 1); ++t) {
        RaceRanking race;
        race.order.assign(k, Athlete{});
        race.order[k - 1] = loser;
        for (int j = 0; j < k - 1; ++j) race.order[(j + t) % (k - 1)] = names[j];
        races.push_back(std::move(race));
    }
    races.push_back({names});

    Profile profile(names, std::move(races));
    auto verification =
        aggregate(profile, ScoreTable::geometric(GeometricParam::finite(p), k));

    auto ml = majority_loser(profile);
    detail::require(ml && *ml == loser, "distinguished athlete is not the majority loser");
    long long lasts = 0;
    for (const auto& race : profile.races())
        if (race.order.back() == loser) ++lasts;
    detail::require(2 * lasts > profile.race_count(), "no absolute majority of last places");
    detail::require(verification.group_of(loser) < verification.group_of(names.front()),
                    "majority loser does not beat the front-runner");

    Witness w{std::move(profile),
              "the majority loser " + loser.id + " (last in " + std::to_string(lasts) + " of " +
                  std::to_string(2 * nk * (k - 1) + 1) + " races) ranks strictly above " +
                  names.front().id + " under p = " + rat_to_string(p),
              std::move(verification),
              std::nullopt,
              std::nullopt};
    return w;
}

enum class IndependenceSide { Winner, Loser };

namespace detail {

struct SandwichBlock {
    long long count;
    int pos_a;  // 1-based positions among the k live slots
    int pos_b;
};

/// The proof's two sandwich layouts, keyed by the sign of n1. Both total
/// 3(|n1| + n2) races.
inline std::vector<SandwichBlock> sandwich_blocks(long long n1, long long n2, int j) {
    const long long n = std::abs(n1) + n2;
    if (n1 > 0)
        return {{n, 1, j}, {n2, 2, j}, {n1, 2, 1}, {n, j, 1}};
    return {{-n1, 1, 2}, {n2, 1, j}, {n, 2, j}, {-n1, j, 2}, {n + n1, j, 1}};
}

/// Builds the block races: pads pinned to the top (winner side) or bottom,
/// athletes a and b on the block's positions, fillers rotating through the
/// leftovers so each gets a fair mix of placements.
inline std::vector<RaceRanking> sandwich_races(const std::vector<SandwichBlock>& blocks, int m,
                                               int k, bool pads_on_top,
                                               const std::vector<Athlete>& pads, const Athlete& a,
                                               const Athlete& b,
                                               const std::vector<Athlete>& fillers) {
    const int offset = pads_on_top ? m - k : 0;
    std::vector<RaceRanking> races;
    long long race_index = 0;
    for (const auto& blk : blocks) {
        for (long long c = 0; c < blk.count; ++c, ++race_index) {
            RaceRanking race;
            race.order.assign(m, Athlete{});
            for (size_t i = 0; i < pads.size(); ++i)
                race.order[pads_on_top ? i : k + i] = pads[i];
            race.order[offset + blk.pos_a - 1] = a;
            race.order[offset + blk.pos_b - 1] = b;
            std::vector<int> free;
            for (int i = 0; i < m; ++i)
                if (race.order[i].id.empty()) free.push_back(i);
            for (size_t f = 0; f < fillers.size(); ++f)
                race.order[free[(f + race_index) % free.size()]] = fillers[f];
            races.push_back(std::move(race));
        }
    }
    return races;
}

}  // namespace detail

/// A profile proving the table is not independent of unanimous winners (or
/// losers) at field size k: padding athletes dominate (or trail) every race,
/// and removing them flips the order of a and b.
inline Witness independence_violation(const ScoreTable& table, int k, IndependenceSide side) {
    const int m = table.max_size();
    if (k < 2 || k >= m)
        throw std::invalid_argument("field size after removal must satisfy 2 <= k < " +
                                    std::to_string(m));
    const bool winner = side == IndependenceSide::Winner;
    {
        auto report = independence_by_size(table, m);
        const auto& entry = report[k - 2];
        if (winner ? entry.winner_independent : entry.loser_independent)
            throw no_witness_error(std::string("the table is independent of unanimous ") +
                                   (winner ? "winners" : "losers") + " at field size " +
                                   std::to_string(k) + "; no witness exists");
    }

    const std::vector<Rat> sm = table.round_vector(m, 0);
    if (!strictly_decreasing(sm))
        throw std::invalid_argument(
            "construction needs strictly decreasing scores at the full field size");
    const std::vector<Rat> sk = table.round_vector(k, 0);
    // scores the live athletes see while the pads are in the race
    std::vector<Rat> u = winner ? std::vector<Rat>(sm.end() - k, sm.end())
                                : std::vector<Rat>(sm.begin(), sm.begin() + k);

    // normalize the k-vector onto u via the first two coordinates
    Rat alpha = (u[0] - u[1]) / (sk[0] - sk[1]);
    Rat beta = u[0] - alpha * sk[0];
    std::vector<Rat> t;
    t.reserve(k);
    for (const Rat& s : sk) t.push_back(alpha * s + beta);
    int j = -1;
    for (int i = 0; i < k; ++i)
        if (t[i] != u[i]) { j = i; break; }
    if (j < 0) throw std::logic_error("flag false but vectors agree");  // unreachable

    Rat A = (u[1] - t[j]) / (u[0] - u[1]);
    Rat B = (u[1] - u[j]) / (u[0] - u[1]);
    Rat q = sb_between(std::min(A, B), std::max(A, B));
    const long long n1 = numerator(q).convert_to<long long>();
    const long long n2 = denominator(q).convert_to<long long>();

    Athlete a{"a"}, b{"b"};
    std::vector<Athlete> pads, fillers;
    for (int i = 1; i <= m - k; ++i) pads.push_back({detail::two_digit("pad", i)});
    for (int i = 1; i <= k - 2; ++i) fillers.push_back({detail::two_digit("x", i)});

    auto blocks = detail::sandwich_blocks(n1, n2, j + 1);
    auto races = detail::sandwich_races(blocks, m, k, winner, pads, a, b, fillers);
    std::vector<Athlete> roster = {a, b};
    roster.insert(roster.end(), pads.begin(), pads.end());
    roster.insert(roster.end(), fillers.begin(), fillers.end());
    Profile profile(std::move(roster), std::move(races));

    // label the athlete leading before the removal "a"
    {
        auto pre = aggregate(profile, table);
        if (pre.group_of(a) > pre.group_of(b)) {
            std::vector<RaceRanking> swapped = profile.races();
            for (auto& race : swapped)
                for (auto& who : race.order) {
                    if (who == a) who = b;
                    else if (who == b) who = a;
                }
            profile = Profile(profile.roster(), std::move(swapped));
        }
    }

    Profile reduced = profile;
    for (const auto& pad : pads) reduced = remove_athlete(reduced, pad);

    auto verification = aggregate(profile, table);
    auto reduced_verification = aggregate(reduced, table);
    detail::require(verification.group_of(a) < verification.group_of(b),
                    "a does not beat b before removal");
    detail::require(reduced_verification.group_of(b) < reduced_verification.group_of(a),
                    "b does not beat a after removal");

    Witness w{std::move(profile),
              std::string("a beats b while ") + std::to_string(m - k) + " unanimous " +
                  (winner ? "winner(s)" : "loser(s)") + " pad the field; after removing them, b "
                  "beats a",
              std::move(verification),
              std::move(reduced),
              std::move(reduced_verification)};
    return w;
}

}  // namespace podium
