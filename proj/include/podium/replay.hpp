#pragma once

#include "podium/core.hpp"
#include "podium/fixtures.hpp"
#include "podium/io.hpp"
#include "podium/optimal.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

namespace podium {

struct ReplayOutcome {
    bool passed = true;
    std::string text;
    json results = json::object();
};

namespace detail {

class ReplayChecker {
public:
    json checks = json::array();
    bool passed = true;
    std::ostringstream text;

    void expect(const std::string& what, const std::string& expected,
                const std::string& actual) {
        bool ok = expected == actual;
        checks.push_back({{"check", what}, {"expected", expected}, {"actual", actual},
                          {"ok", ok}});
        passed = passed && ok;
        text << "  " << (ok ? "ok" : "FAIL") << ": " << what << " = " << actual;
        if (!ok) text << " (expected " << expected << ")";
        text << "\n";
    }

    void expect_total(const TotalRanking<Rat>& r, const std::string& id, long expected) {
        expect(id, std::to_string(expected), rat_to_string(r.total(Athlete{id})));
    }
};

inline int first_places(const Profile& p, const Athlete& a) {
    int c = 0;
    for (const auto& race : p.races())
        if (race.order.front() == a) ++c;
    return c;
}

inline ReplayOutcome replay_table1() {
    ReplayChecker ck;
    Profile season = fixtures::biathlon_season_profile();
    ScoreTable table = fixtures::biathlon_table();
    auto pre = aggregate(season, table);
    ck.text << "season standings (championship points):\n";
    ck.expect_total(pre, "Mäkäräinen", 348);
    ck.expect_total(pre, "Domracheva", 347);
    ck.expect_total(pre, "Glazyrina", 190);
    ck.expect("points leader", "Mäkäräinen", pre.top().front().id);

    auto without = remove_athlete(season, Athlete{"Glazyrina"});
    auto post = aggregate(without, table);
    ck.text << "after removing Glazyrina from every race:\n";
    ck.expect_total(post, "Mäkäräinen", 348);
    ck.expect_total(post, "Domracheva", 348);
    ck.expect("wins for Domracheva", "4",
              std::to_string(first_places(without, Athlete{"Domracheva"})));
    ck.expect("wins for Mäkäräinen", "2",
              std::to_string(first_places(without, Athlete{"Mäkäräinen"})));
    ck.expect("champion after the win tie-break", "Domracheva",
              post.top().size() == 1 ? post.top().front().id : "(tie)");

    ReplayOutcome out{ck.passed, ck.text.str(), json::object()};
    out.results["checks"] = ck.checks;
    out.results["before"] = ranking_to_json(pre);
    out.results["after"] = ranking_to_json(post);
    return out;
}

inline ReplayOutcome replay_table2() {
    ReplayChecker ck;
    Profile weekend = fixtures::biathlon_weekend_profile();
    ScoreTable table = fixtures::biathlon_table();
    auto pre = aggregate(weekend, table);
    ck.text << "weekend totals:\n";
    ck.expect_total(pre, "Soukalová", 120);
    ck.expect_total(pre, "Domracheva", 92);
    ck.expect_total(pre, "Kuzmina", 84);
    ck.expect_total(pre, "Skardino", 72);
    ck.expect_total(pre, "Hildebrand", 71);

    auto post = aggregate(remove_athlete(weekend, Athlete{"Soukalová"}), table);
    ck.text << "after disqualifying Soukalová:\n";
    ck.expect_total(post, "Domracheva", 100);
    ck.expect_total(post, "Kuzmina", 91);
    ck.expect_total(post, "Hildebrand", 77);
    ck.expect_total(post, "Skardino", 76);
    bool overtake = post.group_of(Athlete{"Hildebrand"}) < post.group_of(Athlete{"Skardino"});
    ck.expect("Hildebrand overtakes Skardino", "true", overtake ? "true" : "false");
    if (overtake) ck.text << "Hildebrand passes Skardino without either moving in a race.\n";

    ReplayOutcome out{ck.passed, ck.text.str(), json::object()};
    out.results["checks"] = ck.checks;
    out.results["before"] = ranking_to_json(pre);
    out.results["after"] = ranking_to_json(post);
    return out;
}

inline ReplayOutcome replay_table3() {
    ReplayChecker ck;
    Profile season = fixtures::motogp_season_profile();
    ScoreTable table = fixtures::motogp_table();
    auto standings = aggregate(season, table);
    ck.text << "season totals:\n";
    ck.expect_total(standings, "Alzamora", 227);
    ck.expect_total(standings, "Melandri", 226);
    ck.expect_total(standings, "Azuma", 190);
    ck.expect("champion", "Alzamora",
              standings.top().size() == 1 ? standings.top().front().id : "(tie)");
    const Athlete& champ = standings.top().front();
    ck.expect("race wins for the champion", "0",
              std::to_string(first_places(season, champ)));
    ck.text << "the title goes to a rider who never won a race.\n";

    ReplayOutcome out{ck.passed, ck.text.str(), json::object()};
    out.results["checks"] = ck.checks;
    out.results["standings"] = ranking_to_json(standings);
    return out;
}

inline ReplayOutcome replay_table4() {
    ReplayChecker ck;
    PerformanceTable lags = fixtures::vault_lags();

    auto fmt2 = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    auto raw1 = optimal_scores(lags, Lambda(1));
    const double printed1[8] = {-0.28, -0.38, -0.43, -0.46, -0.49, -0.54, -0.60, -0.63};
    ck.text << "risk-neutral scores (raw, mean lag per position):\n";
    bool raw_ok = true;
    for (size_t j = 0; j < raw1.size(); ++j)
        raw_ok = raw_ok && std::fabs(raw1[j] - printed1[j]) <= 0.005 + 1e-9;
    {
        std::string actual;
        for (double v : raw1) actual += (actual.empty() ? "" : ",") + fmt2(v);
        ck.expect("raw scores within half a hundredth", "true", raw_ok ? "true" : "false");
        ck.text << "  " << actual << "\n";
    }

    auto check_norm = [&](const char* what, const std::vector<double>& raw,
                          const std::vector<long>& expected) {
        auto norm = normalize(raw);
        std::string got, want;
        for (size_t j = 0; j < norm.size(); ++j) {
            got += (j ? "," : "") + std::to_string(std::llround(norm[j]));
            want += (j ? "," : "") + std::to_string(expected[j]);
        }
        ck.expect(what, want, got);
    };
    check_norm("normalized, lambda 1", raw1, {100, 73, 59, 49, 42, 27, 11, 0});
    auto raw100 = optimal_scores(lags, Lambda(100));
    check_norm("normalized, lambda 100", raw100, {100, 51, 34, 26, 20, 11, 5, 0});

    ReplayOutcome out{ck.passed, ck.text.str(), json::object()};
    out.results["checks"] = ck.checks;
    out.results["raw_lambda1"] = raw1;
    out.results["raw_lambda100"] = raw100;
    out.results["normalized_lambda1"] = normalize(raw1);
    out.results["normalized_lambda100"] = normalize(raw100);
    return out;
}

}  // namespace detail

/// Replays one bundled episode and asserts its published numbers. Fixture
/// names: table1 (season standings flip), table2 (bronze changes hands),
/// table3 (champion with no wins), table4 (optimal vault scores).
inline ReplayOutcome replay_fixture(const std::string& name) {
    if (name == "table1") return detail::replay_table1();
    if (name == "table2") return detail::replay_table2();
    if (name == "table3") return detail::replay_table3();
    if (name == "table4") return detail::replay_table4();
    throw std::invalid_argument("unknown fixture '" + name +
                                "' (expected table1, table2, table3 or table4)");
}

}  // namespace podium
