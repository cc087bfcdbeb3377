// Acceptance suite: one line per criterion, plain pass/fail, no framework.
// Exit code is 0 only if every criterion passes.

#include "podium/podium.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace podium;

namespace {

struct Outcome {
    int id;
    std::string label;
    bool passed;
    std::string detail;
};

std::vector<Outcome> outcomes;

void report(int id, const std::string& label, bool passed, const std::string& detail = "") {
    outcomes.push_back({id, label, passed, detail});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// criteria 1-4: the bundled episodes replay exactly, each in under a second
void criterion_replay(int id, const std::string& fixture, const std::string& label) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        auto outcome = replay_fixture(fixture);
        double dt = seconds_since(t0);
        ok = outcome.passed && dt < 1.0;
        if (!outcome.passed) {
            std::istringstream lines(outcome.text);
            std::string line;
            while (std::getline(lines, line))
                if (line.find("FAIL") != std::string::npos) detail += line + "; ";
        } else if (dt >= 1.0) {
            detail = "took " + std::to_string(dt) + "s";
        }
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report(id, label, ok, detail);
}

ScoreTable geo(const char* p, int size) {
    return ScoreTable::geometric(GeometricParam::parse(p), size);
}

// criterion 5: the axioms each family member is supposed to satisfy hold up
// under a large randomized search
void criterion_properties() {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    std::int64_t bad = 0;
    std::uint64_t seed = 42;
    auto sweep = [&](const char* p, AxiomId axiom) {
        auto r = check_axiom(geo(p, 7), axiom, 1000, seed++, 6, 8);
        if (r.violations > 0) {
            bad += r.violations;
            detail += std::string(axiom_name(axiom)) + " broke at p = " + p + "; ";
        }
    };
    for (const char* p : {"3/10", "7/10", "1", "3/2", "5/2", "0", "inf"}) {
        sweep(p, AxiomId::IndependenceUnanimousWinner);
        sweep(p, AxiomId::IndependenceUnanimousLoser);
    }
    sweep("inf", AxiomId::MajorityWinnerFirst);
    sweep("1", AxiomId::ReversalSymmetry);
    for (const char* p : {"3/10", "7/10", "1"}) sweep(p, AxiomId::MajorityLoserNeverFirst);
    sweep("0", AxiomId::MajorityLoserLast);
    double dt = seconds_since(t0);
    bool ok = bad == 0 && dt < 30.0;
    if (dt >= 30.0) detail += "took " + std::to_string(dt) + "s";
    report(5, "randomized search finds no violation of the satisfied axioms", ok, detail);
}

// criterion 6: aggregating the reversed profile with the reciprocal
// parameter reverses the ranking
void criterion_duality() {
    std::string detail;
    bool ok = true;
    std::uint64_t state = 4242;
    std::pair<GeometricParam, GeometricParam> pairs[] = {
        {GeometricParam::parse("1/2"), GeometricParam::parse("1/2").reciprocal()},
        {GeometricParam::parse("2"), GeometricParam::parse("2").reciprocal()},
        {GeometricParam::parse("3"), GeometricParam::parse("3").reciprocal()},
        {GeometricParam::infinity(), GeometricParam::infinity().reciprocal()},
    };
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::mt19937_64 rng(splitmix64(state));
        std::uniform_int_distribution<int> pick_m(2, 6), pick_n(1, 8);
        int m = pick_m(rng), n = pick_n(rng);
        Profile profile = detail::sample_profile(m, n, rng);
        Profile mirrored = reverse(profile);
        for (const auto& [p, q] : pairs) {
            auto fwd = aggregate(profile, ScoreTable::geometric(p, m));
            auto dual = aggregate(mirrored, ScoreTable::geometric(q, m));
            auto expected = fwd.groups;
            std::reverse(expected.begin(), expected.end());
            if (dual.groups != expected) {
                ok = false;
                detail = "mismatch at trial " + std::to_string(trial) + ", p = " +
                         p.to_string();
                break;
            }
        }
    }
    report(6, "reversal duality links p with 1/p on random profiles", ok, detail);
}

// criterion 7: the three counterexample constructions hit their exact totals
void criterion_witnesses() {
    std::string detail;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += what + "; ";
        }
    };
    try {
        auto w = no_race_win_winner(GeometricParam::parse("1"), 4);
        expect(w.verification.total({"a"}) == Rat(6), "borda star total");
        expect(w.verification.total({"b01"}) == Rat(4), "borda rival total");
        expect(w.verification.groups[0] == std::vector<Athlete>{{"a"}}, "borda star on top");

        auto l = majority_loser_first(Rat(2), 3);
        expect(l.profile.race_count() == 17, "loser profile size");
        expect(l.verification.total({"a03"}) == Rat(41), "loser total");
        expect(l.verification.total({"a01"}) == Rat(40), "runner-up total");
        expect(l.verification.group_of({"a03"}) < l.verification.group_of({"a01"}),
               "loser above runner-up");

        auto f = independence_violation(fixtures::biathlon_table(), 40,
                                        IndependenceSide::Winner);
        expect(f.verification.total({"a"}) == Rat(1886), "season total a");
        expect(f.verification.total({"b"}) == Rat(1885), "season total b");
        expect(f.reduced_verification && f.reduced_verification->total({"a"}) == Rat(2100),
               "reduced total a");
        expect(f.reduced_verification && f.reduced_verification->total({"b"}) == Rat(2106),
               "reduced total b");
    } catch (const std::exception& e) {
        ok = false;
        detail += e.what();
    }
    report(7, "counterexample constructions verify with exact totals", ok, detail);
}

// criterion 8: real-world tables satisfy one independence side and provably
// fail the other
void criterion_tables() {
    std::string detail;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += what + "; ";
        }
    };
    try {
        auto prize = fixtures::stretched_borda_table(7);
        expect(check_axiom(prize, AxiomId::IndependenceUnanimousWinner, 1000, 101, 6, 8)
                       .violations == 0,
               "prize-style table should keep unanimous-winner independence");
        expect(check_axiom(prize, AxiomId::MajorityLoserNeverFirst, 1000, 102, 6, 8)
                       .violations == 0,
               "prize-style table should never crown a majority loser");
        auto prize_small = fixtures::stretched_borda_table(4);
        auto w = independence_violation(prize_small, 3, IndependenceSide::Loser);
        expect(axiom_violated(prize_small, AxiomId::IndependenceUnanimousLoser, w.profile),
               "prize-style witness should violate unanimous-loser independence");

        auto penalty = fixtures::triangular_penalty_table(7);
        expect(check_axiom(penalty, AxiomId::IndependenceUnanimousLoser, 1000, 103, 6, 8)
                       .violations == 0,
               "penalty table should keep unanimous-loser independence");
        expect(check_axiom(penalty, AxiomId::MajorityLoserNeverFirst, 1000, 104, 6, 8)
                       .violations == 0,
               "penalty table should never crown a majority loser");
        auto penalty_small = fixtures::triangular_penalty_table(4);
        auto v = independence_violation(penalty_small, 3, IndependenceSide::Winner);
        expect(axiom_violated(penalty_small, AxiomId::IndependenceUnanimousWinner, v.profile),
               "penalty witness should violate unanimous-winner independence");
    } catch (const std::exception& e) {
        ok = false;
        detail += e.what();
    }
    report(8, "score and penalty tables split the independence axioms as analysed", ok,
           detail);
}

// criterion 9: the fitter recovers known parameters and lands on the
// published estimates for the bundled score tables
void criterion_fit() {
    std::string detail;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += what + "; ";
        }
    };
    try {
        for (double p : {0.5, 1.0, 1.3, 2.0}) {
            for (int m : {8, 41}) {
                auto v = geometric_scores(GeometricParam::finite(rat_from_double(p)), m);
                std::vector<double> s;
                for (const auto& x : v) s.push_back(to_double(x));
                auto fit = fit_geometric(s);
                if (std::abs(fit.p - p) >= 1e-4) {
                    std::ostringstream msg;
                    msg << "recovery off at p = " << p << ", m = " << m << " (got " << fit.p
                        << ")";
                    expect(false, msg.str());
                }
            }
        }
        auto widen = [](const std::vector<Rat>& v) {
            std::vector<double> out;
            for (const auto& x : v) out.push_back(to_double(x));
            return out;
        };
        auto score = fit_geometric(widen(fixtures::biathlon_scores()));
        expect(std::abs(score.p - 1.058) < 0.05,
               "season score fit " + std::to_string(score.p));
        auto prize = fit_geometric(widen(fixtures::biathlon_prize()));
        expect(std::abs(prize.p - 1.244) < 0.05,
               "prize money fit " + std::to_string(prize.p));
    } catch (const std::exception& e) {
        ok = false;
        detail += e.what();
    }
    report(9, "geometric fitting recovers parameters and published estimates", ok, detail);
}

// criterion 10: carrying the risk attitude across disciplines by record ratio
void criterion_calibrate() {
    std::string detail;
    bool ok = false;
    try {
        auto l = calibrate_lambda(9.58, Lambda(100.0), 21.34);
        ok = std::abs(l.value - 7.9) < 0.05;
        if (!ok) detail = "got " + std::to_string(l.value);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report(10, "lambda calibration lands on the expected sprint value", ok, detail);
}

}  // namespace

int main() {
    criterion_replay(1, "table1", "season ranking and tie-break replay exactly");
    criterion_replay(2, "table2", "weekend mini-series replays exactly");
    criterion_replay(3, "table3", "road-racing season replays exactly");
    criterion_replay(4, "table4", "vault score scale replays within its tolerance");
    criterion_properties();
    criterion_duality();
    criterion_witnesses();
    criterion_tables();
    criterion_fit();
    criterion_calibrate();

    bool all = true;
    for (const auto& o : outcomes) {
        std::printf("[%s] criterion %d: %s%s%s\n", o.passed ? "PASS" : "FAIL", o.id,
                    o.label.c_str(), o.detail.empty() ? "" : " -- ", o.detail.c_str());
        all = all && o.passed;
    }
    std::printf("%d of %zu criteria passed\n",
                static_cast<int>(std::count_if(outcomes.begin(), outcomes.end(),
                                               [](const Outcome& o) { return o.passed; })),
                outcomes.size());
    return all ? 0 : 1;
}
