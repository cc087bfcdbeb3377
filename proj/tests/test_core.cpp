#include <catch2/catch_amalgamated.hpp>

#include "podium/core.hpp"
#include "podium/rules.hpp"

using namespace podium;

namespace {

RaceRanking race(std::initializer_list<const char*> ids) {
    RaceRanking r;
    for (const char* id : ids) r.order.push_back({id});
    return r;
}

}  // namespace

TEST_CASE("profile validates its races", "[core]") {
    auto p = Profile::from_races({race({"a", "b", "c"}), race({"c", "a", "b"})});
    CHECK(p.field_size() == 3);
    CHECK(p.race_count() == 2);

    CHECK_THROWS_AS(Profile::from_races({}), std::invalid_argument);
    // one race missing an athlete
    CHECK_THROWS_AS(Profile::from_races({race({"a", "b"}), race({"a", "c"})}),
                    std::invalid_argument);
    // duplicate athlete inside a race
    CHECK_THROWS_AS(Profile::from_races({race({"a", "a"})}), std::invalid_argument);
}

TEST_CASE("aggregate orders by total score", "[core]") {
    auto p = Profile::from_races({race({"a", "b", "c"}), race({"b", "a", "c"})});
    auto table = ScoreTable::geometric(GeometricParam::finite(Rat(2)), 3);
    auto ranking = aggregate(p, table);
    // scores (4,2,1): a = 4+2 = 6, b = 2+4 = 6, c = 2
    REQUIRE(ranking.groups.size() == 2);
    CHECK(ranking.groups[0] == std::vector<Athlete>{{"a"}, {"b"}});
    CHECK(ranking.groups[1] == std::vector<Athlete>{{"c"}});
    CHECK(ranking.total({"a"}) == Rat(6));
    CHECK(ranking.total({"c"}) == Rat(2));
    CHECK(ranking.group_of({"c"}) == 1);
    CHECK(ranking.top() == std::vector<Athlete>{{"a"}, {"b"}});
    CHECK(ranking.bottom() == std::vector<Athlete>{{"c"}});
}

TEST_CASE("aggregate breaks ties lexicographically across rounds", "[core]") {
    // generalised plurality on 3 athletes: round 1 counts firsts, round 2
    // counts top-two finishes
    auto p = Profile::from_races({race({"a", "b", "c"}), race({"b", "c", "a"}),
                                  race({"a", "c", "b"}), race({"b", "a", "c"})});
    auto table = ScoreTable::geometric(GeometricParam::infinity(), 3);
    auto ranking = aggregate(p, table);
    // firsts: a = 2, b = 2, c = 0; top-two: a = 3, b = 3, c = 2
    REQUIRE(ranking.groups.size() == 2);
    CHECK(ranking.groups[0] == std::vector<Athlete>{{"a"}, {"b"}});
    // the tie-break round is part of the stored totals
    CHECK(ranking.totals.at({"a"}) == std::vector<Rat>{Rat(2), Rat(3)});
}

TEST_CASE("a later round splits an earlier tie", "[core]") {
    auto p = Profile::from_races({race({"a", "b", "c"}), race({"b", "a", "c"}),
                                  race({"c", "a", "b"})});
    auto table = ScoreTable::geometric(GeometricParam::infinity(), 3);
    auto ranking = aggregate(p, table);
    // firsts: all 1; top-two: a = 3, b = 2, c = 1
    REQUIRE(ranking.groups.size() == 3);
    CHECK(ranking.groups[0] == std::vector<Athlete>{{"a"}});
    CHECK(ranking.groups[1] == std::vector<Athlete>{{"b"}});
    CHECK(ranking.groups[2] == std::vector<Athlete>{{"c"}});
}

TEST_CASE("aggregate refuses a table that is too small", "[core]") {
    auto p = Profile::from_races({race({"a", "b", "c"})});
    auto table = ScoreTable::geometric(GeometricParam::finite(Rat(2)), 2);
    CHECK_THROWS_WITH(aggregate(p, table),
                      "score table has no vector for field size 3 (max 2)");
}

TEST_CASE("remove_athlete drops one athlete everywhere", "[core]") {
    auto p = Profile::from_races({race({"a", "b", "c"}), race({"c", "b", "a"})});
    auto q = remove_athlete(p, {"b"});
    CHECK(q.field_size() == 2);
    CHECK(q.races()[0].order == std::vector<Athlete>{{"a"}, {"c"}});
    CHECK(q.races()[1].order == std::vector<Athlete>{{"c"}, {"a"}});

    CHECK_THROWS_AS(remove_athlete(p, {"zz"}), std::invalid_argument);
    // shrinking to a single athlete is fine; removing the last one is not
    auto two = Profile::from_races({race({"a", "b"})});
    auto one = remove_athlete(two, {"a"});
    CHECK(one.field_size() == 1);
    CHECK_THROWS_AS(remove_athlete(one, {"b"}), std::invalid_argument);
}

TEST_CASE("groups_without erases an athlete and drops empty groups", "[core]") {
    std::vector<std::vector<Athlete>> groups{{{"a"}, {"b"}}, {{"c"}}};
    auto without_b = groups_without(groups, {"b"});
    CHECK(without_b == std::vector<std::vector<Athlete>>{{{"a"}}, {{"c"}}});
    auto without_c = groups_without(groups, {"c"});
    CHECK(without_c == std::vector<std::vector<Athlete>>{{{"a"}, {"b"}}});
}

TEST_CASE("double mode treats near-equal totals as ties", "[core]") {
    CHECK(score_compare<double>::equal(1.0, 1.0 + 1e-12));
    CHECK_FALSE(score_compare<double>::equal(1.0, 1.0 + 1e-6));
    CHECK(score_compare<double>::equal(0.0, 1e-10));
    // exact mode never blurs
    CHECK_FALSE(score_compare<Rat>::equal(Rat(1), Rat(1) + Rat(1, 1000000000000)));
}

TEST_CASE("total() needs at least one round", "[core]") {
    TotalRanking<Rat> empty;
    CHECK_THROWS_AS(empty.total({"a"}), std::logic_error);
}
