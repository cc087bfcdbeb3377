#pragma once

#include "podium/rational.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <concepts>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace podium {

struct Athlete {
    std::string id;
    auto operator<=>(const Athlete&) const = default;
};

/// One race result: order[0] finished first.
struct RaceRanking {
    std::vector<Athlete> order;
    bool operator==(const RaceRanking&) const = default;
};

/// n races over a common roster of m athletes. Every race must rank the
/// whole roster, with no ties and no duplicates; heterogeneous real-world
/// data is normalized before it gets here (see io.hpp).
class Profile {
public:
    Profile(std::vector<Athlete> roster, std::vector<RaceRanking> races)
        : roster_(std::move(roster)), races_(std::move(races)) {
        std::sort(roster_.begin(), roster_.end());
        validate();
    }

    static Profile from_races(std::vector<RaceRanking> races) {
        if (races.empty()) throw std::invalid_argument("profile needs at least one race");
        std::vector<Athlete> roster = races.front().order;
        return Profile(std::move(roster), std::move(races));
    }

    const std::vector<Athlete>& roster() const { return roster_; }
    const std::vector<RaceRanking>& races() const { return races_; }
    int field_size() const { return static_cast<int>(roster_.size()); }
    int race_count() const { return static_cast<int>(races_.size()); }

    bool operator==(const Profile&) const = default;

private:
    void validate() const {
        if (roster_.empty()) throw std::invalid_argument("profile roster is empty");
        if (races_.empty()) throw std::invalid_argument("profile needs at least one race");
        for (const auto& a : roster_)
            if (a.id.empty()) throw std::invalid_argument("athlete id must be non-empty");
        for (size_t i = 1; i < roster_.size(); ++i)
            if (roster_[i - 1].id == roster_[i].id)
                throw std::invalid_argument("duplicate athlete '" + roster_[i].id + "' in roster");
        for (size_t r = 0; r < races_.size(); ++r) {
            auto sorted = races_[r].order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != roster_)
                throw std::invalid_argument("race " + std::to_string(r + 1) +
                                            " is not a permutation of the roster");
        }
    }

    std::vector<Athlete> roster_;
    std::vector<RaceRanking> races_;
};

/// Equality policy per arithmetic mode: exact types compare exactly, floats
/// within a relative epsilon.
template <typename R>
struct score_compare {
    static bool equal(const R& a, const R& b) { return a == b; }
};

template <>
struct score_compare<double> {
    static constexpr double rel_eps = 1e-9;
    static bool equal(double a, double b) {
        double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= rel_eps * scale;
    }
};

/// Weak order over athletes: groups[0] is best; athletes within a group are
/// tied after every round. totals[a][r] is a's round-r sum.
template <typename R>
struct TotalRanking {
    std::vector<std::vector<Athlete>> groups;
    std::map<Athlete, std::vector<R>> totals;

    int group_of(const Athlete& a) const {
        for (size_t g = 0; g < groups.size(); ++g)
            for (const auto& x : groups[g])
                if (x == a) return static_cast<int>(g);
        throw std::invalid_argument("unknown athlete '" + a.id + "'");
    }
    const std::vector<Athlete>& top() const { return groups.front(); }
    const std::vector<Athlete>& bottom() const { return groups.back(); }
    /// round-1 total, the headline number
    const R& total(const Athlete& a) const {
        const auto& t = totals.at(a);
        if (t.empty()) throw std::logic_error("ranking has no score rounds");
        return t.front();
    }
};

/// groups with one athlete deleted (empty groups dropped); used to compare
/// rankings before and after a removal
inline std::vector<std::vector<Athlete>> groups_without(
    std::vector<std::vector<Athlete>> groups, const Athlete& a) {
    for (auto& g : groups) std::erase(g, a);
    std::erase_if(groups, [](const auto& g) { return g.empty(); });
    return groups;
}

template <typename R>
std::map<Athlete, R> total_scores(const Profile& p, const std::vector<R>& scores) {
    if (static_cast<int>(scores.size()) != p.field_size())
        throw std::invalid_argument("score vector has " + std::to_string(scores.size()) +
                                    " entries for a field of " + std::to_string(p.field_size()));
    std::map<Athlete, R> out;
    for (const auto& a : p.roster()) out[a] = R{};
    for (const auto& race : p.races())
        for (size_t pos = 0; pos < race.order.size(); ++pos)
            out[race.order[pos]] += scores[pos];
    return out;
}

/// Lexicographic aggregation over explicit per-round score vectors. Round 1
/// orders the groups, later rounds split ties. With zero rounds everyone is
/// tied.
template <typename R>
TotalRanking<R> aggregate_rounds(const Profile& p, const std::vector<std::vector<R>>& rounds) {
    const int m = p.field_size();
    for (const auto& v : rounds)
        if (static_cast<int>(v.size()) != m)
            throw std::invalid_argument("round vector length " + std::to_string(v.size()) +
                                        " does not match field size " + std::to_string(m));

    TotalRanking<R> out;
    for (const auto& a : p.roster()) out.totals[a] = std::vector<R>(rounds.size(), R{});
    for (const auto& race : p.races())
        for (size_t pos = 0; pos < race.order.size(); ++pos) {
            auto& t = out.totals[race.order[pos]];
            for (size_t r = 0; r < rounds.size(); ++r) t[r] += rounds[r][pos];
        }

    // Both the order and the grouping must use the same equality policy,
    // otherwise a sub-epsilon float difference could split a tie.
    std::vector<Athlete> order = p.roster();
    std::stable_sort(order.begin(), order.end(), [&](const Athlete& a, const Athlete& b) {
        const auto &ta = out.totals.at(a), &tb = out.totals.at(b);
        for (size_t r = 0; r < ta.size(); ++r) {
            if (score_compare<R>::equal(ta[r], tb[r])) continue;
            return ta[r] > tb[r];  // higher first
        }
        return false;
    });
    auto tied = [&](const Athlete& a, const Athlete& b) {
        const auto &ta = out.totals.at(a), &tb = out.totals.at(b);
        for (size_t r = 0; r < ta.size(); ++r)
            if (!score_compare<R>::equal(ta[r], tb[r])) return false;
        return true;
    };
    for (const auto& a : order) {
        if (out.groups.empty() || !tied(out.groups.back().back(), a))
            out.groups.push_back({});
        out.groups.back().push_back(a);
    }
    for (auto& g : out.groups) std::sort(g.begin(), g.end());
    return out;
}

template <typename R>
TotalRanking<R> aggregate(const Profile& p, const std::vector<R>& scores) {
    return aggregate_rounds(p, std::vector<std::vector<R>>{scores});
}

template <typename T>
concept ScoreTableLike = requires(const T& t, int k, int r) {
    { t.max_size() } -> std::convertible_to<int>;
    { t.rounds(k) } -> std::convertible_to<int>;
    { t.round_vector(k, r) };
};

template <ScoreTableLike T>
auto aggregate(const Profile& p, const T& table) {
    using R = typename std::decay_t<decltype(table.round_vector(1, 0))>::value_type;
    const int m = p.field_size();
    if (m > table.max_size())
        throw std::invalid_argument("score table has no vector for field size " +
                                    std::to_string(m) + " (max " +
                                    std::to_string(table.max_size()) + ")");
    std::vector<std::vector<R>> rounds;
    for (int r = 0; r < table.rounds(m); ++r) rounds.push_back(table.round_vector(m, r));
    return aggregate_rounds(p, rounds);
}

inline Profile remove_athlete(const Profile& p, const Athlete& a) {
    if (!std::binary_search(p.roster().begin(), p.roster().end(), a))
        throw std::invalid_argument("unknown athlete '" + a.id + "'");
    if (p.field_size() < 2)
        throw std::invalid_argument("cannot remove the only athlete in the field");
    std::vector<Athlete> roster;
    for (const auto& x : p.roster())
        if (!(x == a)) roster.push_back(x);
    std::vector<RaceRanking> races;
    races.reserve(p.races().size());
    for (const auto& race : p.races()) {
        RaceRanking r;
        r.order.reserve(race.order.size() - 1);
        for (const auto& x : race.order)
            if (!(x == a)) r.order.push_back(x);
        races.push_back(std::move(r));
    }
    return Profile(std::move(roster), std::move(races));
}

}  // namespace podium
