#pragma once

#include "podium/core.hpp"
#include "podium/rules.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace podium {

enum class AxiomId {
    IndependenceUnanimousWinner,
    IndependenceUnanimousLoser,
    MajorityWinnerFirst,
    MajorityLoserNeverFirst,
    MajorityLoserLast,
    ReversalSymmetry,
};

inline const char* axiom_name(AxiomId a) {
    switch (a) {
        case AxiomId::IndependenceUnanimousWinner: return "independence-unanimous-winner";
        case AxiomId::IndependenceUnanimousLoser: return "independence-unanimous-loser";
        case AxiomId::MajorityWinnerFirst: return "majority-winner-first";
        case AxiomId::MajorityLoserNeverFirst: return "majority-loser-never-first";
        case AxiomId::MajorityLoserLast: return "majority-loser-last";
        case AxiomId::ReversalSymmetry: return "reversal-symmetry";
    }
    throw std::logic_error("unreachable");
}

inline AxiomId parse_axiom(const std::string& name) {
    for (AxiomId a : {AxiomId::IndependenceUnanimousWinner, AxiomId::IndependenceUnanimousLoser,
                      AxiomId::MajorityWinnerFirst, AxiomId::MajorityLoserNeverFirst,
                      AxiomId::MajorityLoserLast, AxiomId::ReversalSymmetry})
        if (name == axiom_name(a)) return a;
    throw std::invalid_argument("unknown axiom '" + name + "'");
}

inline std::optional<Athlete> unanimous_winner(const Profile& p) {
    const Athlete& cand = p.races().front().order.front();
    for (const auto& race : p.races())
        if (!(race.order.front() == cand)) return std::nullopt;
    return cand;
}

inline std::optional<Athlete> unanimous_loser(const Profile& p) {
    const Athlete& cand = p.races().front().order.back();
    for (const auto& race : p.races())
        if (!(race.order.back() == cand)) return std::nullopt;
    return cand;
}

/// Athlete first in strictly more than half the races, if any.
inline std::optional<Athlete> majority_winner(const Profile& p) {
    std::map<Athlete, int> firsts;
    for (const auto& race : p.races()) ++firsts[race.order.front()];
    for (const auto& [a, c] : firsts)
        if (2 * c > p.race_count()) return a;
    return std::nullopt;
}

inline std::optional<Athlete> majority_loser(const Profile& p) {
    std::map<Athlete, int> lasts;
    for (const auto& race : p.races()) ++lasts[race.order.back()];
    for (const auto& [a, c] : lasts)
        if (2 * c > p.race_count()) return a;
    return std::nullopt;
}

inline Profile reverse(const Profile& p) {
    std::vector<RaceRanking> races = p.races();
    for (auto& race : races) std::reverse(race.order.begin(), race.order.end());
    return Profile(p.roster(), std::move(races));
}

/// Does this concrete profile witness a violation of the axiom under the
/// table? Profiles that do not trigger the axiom's premise (no unanimous or
/// majority athlete, tied top group for reversal) return false.
inline bool axiom_violated(const ScoreTable& table, AxiomId axiom, const Profile& p) {
    auto unique_group = [](const std::vector<Athlete>& g, const Athlete& a) {
        return g.size() == 1 && g.front() == a;
    };
    switch (axiom) {
        case AxiomId::IndependenceUnanimousWinner:
        case AxiomId::IndependenceUnanimousLoser: {
            const bool winner = axiom == AxiomId::IndependenceUnanimousWinner;
            auto u = winner ? unanimous_winner(p) : unanimous_loser(p);
            if (!u || p.field_size() < 2) return false;
            auto full = aggregate(p, table);
            const auto& extreme = winner ? full.top() : full.bottom();
            if (std::find(extreme.begin(), extreme.end(), *u) == extreme.end()) return true;
            auto reduced = aggregate(remove_athlete(p, *u), table);
            return reduced.groups != groups_without(full.groups, *u);
        }
        case AxiomId::MajorityWinnerFirst: {
            auto w = majority_winner(p);
            if (!w) return false;
            return !unique_group(aggregate(p, table).top(), *w);
        }
        case AxiomId::MajorityLoserNeverFirst: {
            auto l = majority_loser(p);
            if (!l) return false;
            return unique_group(aggregate(p, table).top(), *l);
        }
        case AxiomId::MajorityLoserLast: {
            auto l = majority_loser(p);
            if (!l) return false;
            return !unique_group(aggregate(p, table).bottom(), *l);
        }
        case AxiomId::ReversalSymmetry: {
            auto full = aggregate(p, table);
            if (full.top().size() != 1) return false;  // ties are out of scope, skip
            const Athlete& a = full.top().front();
            return unique_group(aggregate(reverse(p), table).top(), a);
        }
    }
    throw std::logic_error("unreachable");
}

struct TrialReport {
    std::int64_t trials = 0;
    std::int64_t violations = 0;
    std::optional<Profile> first_counterexample;
    std::uint64_t seed = 0;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace detail {

inline std::vector<Athlete> numbered_roster(int m) {
    std::vector<Athlete> roster;
    roster.reserve(m);
    for (int i = 1; i <= m; ++i)
        roster.push_back({"a" + std::string(i < 10 ? "0" : "") + std::to_string(i)});
    return roster;
}

/// impartial culture: each race an independent uniform permutation
inline Profile sample_profile(int m, int n, std::mt19937_64& rng) {
    std::vector<Athlete> roster = numbered_roster(m);
    std::vector<RaceRanking> races(n);
    for (auto& race : races) {
        race.order = roster;
        std::shuffle(race.order.begin(), race.order.end(), rng);
    }
    return Profile(std::move(roster), std::move(races));
}

/// Adds a fresh athlete at the very front (winner) or back (loser) of every
/// race, so independence axioms always have something to remove.
inline Profile pad_unanimous(const Profile& p, bool winner) {
    Athlete extra{"pad"};
    std::vector<Athlete> roster = p.roster();
    roster.push_back(extra);
    std::vector<RaceRanking> races = p.races();
    for (auto& race : races) {
        if (winner) race.order.insert(race.order.begin(), extra);
        else race.order.push_back(extra);
    }
    return Profile(std::move(roster), std::move(races));
}

inline bool is_independence(AxiomId a) {
    return a == AxiomId::IndependenceUnanimousWinner || a == AxiomId::IndependenceUnanimousLoser;
}

}  // namespace detail

/// Randomized evidence: samples profiles with 2..m_max athletes and 1..n_max
/// races and counts violations. A clean report is "no violation in N trials",
/// not a proof.
inline TrialReport check_axiom(const ScoreTable& table, AxiomId axiom, std::int64_t trials,
                               std::uint64_t seed, int m_max, int n_max) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (m_max < 2) throw std::invalid_argument("degenerate bounds (m_max < 2)");
    if (n_max < 1) throw std::invalid_argument("degenerate bounds (n_max < 1)");
    const bool indep = detail::is_independence(axiom);
    const int m_cap = table.max_size() - (indep ? 1 : 0);
    if (m_cap < 2)
        throw std::invalid_argument("score table only covers " +
                                    std::to_string(table.max_size()) +
                                    " athletes, too few for this check");
    const int m_hi = std::min(m_max, m_cap);

    TrialReport report;
    report.seed = seed;
    std::uint64_t state = seed;
    for (std::int64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(state));
        int m = std::uniform_int_distribution<int>(2, m_hi)(rng);
        int n = std::uniform_int_distribution<int>(1, n_max)(rng);
        Profile probe = detail::sample_profile(m, n, rng);
        if (indep)
            probe = detail::pad_unanimous(probe, axiom == AxiomId::IndependenceUnanimousWinner);
        ++report.trials;
        if (axiom_violated(table, axiom, probe)) {
            ++report.violations;
            if (!report.first_counterexample) report.first_counterexample = probe;
        }
    }
    return report;
}

/// Every profile up to the given micro-sizes (m ≤ 4, n ≤ 4); races are
/// ordered, so all (m!)^n sequences are visited.
inline TrialReport check_axiom_exhaustive(const ScoreTable& table, AxiomId axiom, int m_max,
                                          int n_max) {
    if (m_max < 2) throw std::invalid_argument("degenerate bounds (m_max < 2)");
    if (n_max < 1) throw std::invalid_argument("degenerate bounds (n_max < 1)");
    if (m_max > 4 || n_max > 4)
        throw std::invalid_argument("exhaustive mode is limited to m <= 4 and n <= 4");
    const bool indep = detail::is_independence(axiom);
    if (table.max_size() < m_max + (indep ? 1 : 0))
        throw std::invalid_argument("score table only covers " +
                                    std::to_string(table.max_size()) +
                                    " athletes, too few for this check");

    TrialReport report;
    for (int m = 2; m <= m_max; ++m) {
        std::vector<Athlete> roster = detail::numbered_roster(m);
        std::vector<std::vector<Athlete>> perms;
        std::vector<Athlete> perm = roster;
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        for (int n = 1; n <= n_max; ++n) {
            std::vector<size_t> idx(n, 0);
            while (true) {
                std::vector<RaceRanking> races;
                races.reserve(n);
                for (size_t i : idx) races.push_back({perms[i]});
                Profile probe(roster, std::move(races));
                if (indep)
                    probe = detail::pad_unanimous(
                        probe, axiom == AxiomId::IndependenceUnanimousWinner);
                ++report.trials;
                if (axiom_violated(table, axiom, probe)) {
                    ++report.violations;
                    if (!report.first_counterexample) report.first_counterexample = probe;
                }
                size_t d = 0;
                while (d < idx.size() && ++idx[d] == perms.size()) idx[d++] = 0;
                if (d == idx.size()) break;
            }
        }
    }
    return report;
}

}  // namespace podium
