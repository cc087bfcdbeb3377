// podium: rank aggregation for race series.
//
// Exit codes: 0 success, 1 a requested assertion or witness failed,
// 2 usage or data error.

#include "podium/podium.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace podium;

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 42;
};

void emit(const GlobalOpts& g, const std::string& command, json inputs, json results,
          const std::string& text) {
    if (g.format == "json") {
        json envelope{{"command", command},
                      {"inputs", std::move(inputs)},
                      {"results", std::move(results)},
                      {"provenance", {{"seed", g.seed}, {"version", version}}}};
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

Profile load_profile(const std::string& path, bool intersect) {
    auto in = open_file(path);
    return ingest_races(in, intersect);
}

/// Rule selection shared by rank/remove/check/witness: either a geometric
/// parameter or a position,score CSV.
struct RuleOpts {
    std::string rule;  // inferred from --p/--table when not given
    std::string p;
    std::string table_path;
    std::string trim = "bottom";
    std::string tiebreak = "none";
    int size = 0;  // geometric tables need an explicit field size

    void attach(CLI::App* cmd, bool need_size) {
        cmd->add_option("--rule", rule, "rule family (inferred from --p or --table)")
            ->check(CLI::IsMember({"geometric", "table"}));
        auto* popt = cmd->add_option("--p", p, "geometric parameter (rational, 0 or inf)");
        auto* topt =
            cmd->add_option("--table", table_path, "CSV score table (header position,score)");
        popt->excludes(topt);
        topt->excludes(popt);
        cmd->add_option("--trim", trim, "how a table shrinks to smaller fields")
            ->check(CLI::IsMember({"bottom", "top"}));
        cmd->add_option("--tiebreak", tiebreak, "final tie-break round")
            ->check(CLI::IsMember({"none", "plurality"}));
        if (need_size)
            cmd->add_option("--size,-k", size, "field size the table must cover")
                ->check(CLI::PositiveNumber);
    }

    ScoreTable build(int min_size) const {
        if (rule == "geometric" && p.empty())
            throw std::invalid_argument("--rule geometric needs --p");
        if (rule == "table" && table_path.empty())
            throw std::invalid_argument("--rule table needs --table FILE");
        ScoreTable t = [&] {
            if (!table_path.empty()) {
                auto in = open_file(table_path);
                return ScoreTable::custom(ingest_scores(in), trim == "top"
                                                                 ? TrimPolicy::FromTop
                                                                 : TrimPolicy::FromBottom);
            }
            if (p.empty())
                throw std::invalid_argument("pick a rule: --p for geometric or --table FILE");
            int k = size > 0 ? size : min_size;
            if (k < 1)
                throw std::invalid_argument("geometric rules need an explicit field size");
            return ScoreTable::geometric(GeometricParam::parse(p), k);
        }();
        return tiebreak == "plurality" ? t.with_plurality_tiebreak() : t;
    }

    json describe() const {
        json j{{"trim", trim}, {"tiebreak", tiebreak}};
        j["rule"] = table_path.empty() ? "geometric" : "table";
        if (!p.empty()) j["p"] = p;
        if (!table_path.empty()) j["table"] = table_path;
        return j;
    }
};

std::string render_ranking(const TotalRanking<Rat>& r) {
    std::ostringstream out;
    int position = 1;
    for (const auto& group : r.groups) {
        out << " " << position << ".";
        bool first = true;
        for (const auto& a : group) {
            out << (first ? " " : ", ") << a.id;
            first = false;
        }
        out << "  " << rat_to_string(r.total(group.front()));
        if (group.size() > 1) out << "  (tied)";
        out << "\n";
        position += static_cast<int>(group.size());
    }
    return out.str();
}

std::string render_profile(const Profile& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.races().size(); ++i) {
        out << "  race " << i + 1 << ": ";
        const auto& order = p.races()[i].order;
        for (size_t j = 0; j < order.size(); ++j) out << (j ? " > " : "") << order[j].id;
        out << "\n";
    }
    return out.str();
}

std::vector<double> fixture_vector(const std::string& name) {
    auto widen = [](const std::vector<Rat>& v) {
        std::vector<double> out;
        for (const auto& x : v) out.push_back(to_double(x));
        return out;
    };
    if (name == "ibu-score") return widen(fixtures::biathlon_scores());
    if (name == "ibu-prize") return widen(fixtures::biathlon_prize());
    if (name == "motogp") return widen(fixtures::motogp_scores());
    if (name == "diamond-borda") return fixtures::diamond_league_borda();
    if (name == "pga-score-reconstructed") return fixtures::pga_scores_reconstructed();
    if (name == "pga-prize-reconstructed") return fixtures::pga_prize_reconstructed();
    throw std::invalid_argument(
        "unknown fixture '" + name +
        "' (expected ibu-score, ibu-prize, motogp, diamond-borda, "
        "pga-score-reconstructed or pga-prize-reconstructed)");
}

// ---------------------------------------------------------------- commands

int cmd_scores(const GlobalOpts& g, const RuleOpts& rule) {
    ScoreTable table = rule.build(0);
    int k = rule.size > 0 ? rule.size : table.max_size();
    json rounds = json::array();
    std::ostringstream text;
    for (int r = 0; r < table.rounds(k); ++r) {
        auto v = table.round_vector(k, r);
        json row = json::array();
        text << "round " << r + 1 << ":";
        for (const auto& s : v) {
            row.push_back(rat_to_string(s));
            text << " " << rat_to_string(s);
        }
        text << "\n";
        rounds.push_back(std::move(row));
    }
    json inputs = rule.describe();
    inputs["size"] = k;
    emit(g, "scores", inputs, json{{"rounds", rounds}}, text.str());
    return 0;
}

int cmd_rank(const GlobalOpts& g, const RuleOpts& rule, const std::string& input,
             bool intersect) {
    Profile profile = load_profile(input, intersect);
    ScoreTable table = rule.build(profile.field_size());
    auto ranking = aggregate(profile, table);
    json inputs = rule.describe();
    inputs["input"] = input;
    inputs["intersect"] = intersect;
    emit(g, "rank", inputs,
         json{{"ranking", ranking_to_json(ranking)}, {"profile", profile_to_json(profile)}},
         render_ranking(ranking));
    return 0;
}

int cmd_remove(const GlobalOpts& g, const RuleOpts& rule, const std::string& input,
               bool intersect, const std::string& athlete, const std::string& expect) {
    Profile profile = load_profile(input, intersect);
    ScoreTable table = rule.build(profile.field_size());
    auto before = aggregate(profile, table);
    Profile reduced = remove_athlete(profile, Athlete{athlete});
    auto after = aggregate(reduced, table);
    bool changed = groups_without(before.groups, Athlete{athlete}) != after.groups;
    std::string verdict = changed ? "CHANGED" : "UNCHANGED";

    std::ostringstream text;
    text << "before:\n" << render_ranking(before);
    text << "after removing " << athlete << ":\n" << render_ranking(after);
    text << verdict << "\n";

    json inputs = rule.describe();
    inputs["input"] = input;
    inputs["athlete"] = athlete;
    if (!expect.empty()) inputs["expect"] = expect;
    emit(g, "remove", inputs,
         json{{"before", ranking_to_json(before)},
              {"after", ranking_to_json(after)},
              {"verdict", verdict}},
         text.str());
    if (!expect.empty() && verdict != (expect == "changed" ? "CHANGED" : "UNCHANGED")) return 1;
    return 0;
}

int cmd_check(const GlobalOpts& g, const RuleOpts& rule, const std::string& axiom_str,
              std::int64_t trials, int m_max, int n_max, bool exhaustive) {
    AxiomId axiom = parse_axiom(axiom_str);
    // independence checks pad an extra athlete; make the table big enough
    ScoreTable table = rule.build(m_max + 1);
    TrialReport report = exhaustive
                             ? check_axiom_exhaustive(table, axiom, m_max, n_max)
                             : check_axiom(table, axiom, trials, g.seed, m_max, n_max);

    std::ostringstream text;
    if (report.violations == 0) {
        text << "no violation in " << report.trials << " trials\n";
    } else {
        text << report.violations << " violation(s) in " << report.trials << " trials\n";
        text << "first counterexample:\n" << render_profile(*report.first_counterexample);
    }

    json results{{"trials", report.trials}, {"violations", report.violations}};
    if (report.first_counterexample)
        results["first_counterexample"] = profile_to_json(*report.first_counterexample);
    json inputs = rule.describe();
    inputs["axiom"] = axiom_str;
    inputs["exhaustive"] = exhaustive;
    inputs["m_max"] = m_max;
    inputs["n_max"] = n_max;
    if (!exhaustive) inputs["trials"] = trials;
    emit(g, "check", inputs, results, text.str());
    return report.violations == 0 ? 0 : 1;
}

int emit_witness(const GlobalOpts& g, const std::string& command, json inputs, const Witness& w) {
    std::ostringstream text;
    text << w.claim << "\n";
    text << render_profile(w.profile);
    text << "overall:\n" << render_ranking(w.verification);
    if (w.reduced_verification) text << "after removal:\n" << render_ranking(*w.reduced_verification);
    emit(g, command, std::move(inputs), witness_to_json(w), text.str());
    return 0;
}

int cmd_optimal(const GlobalOpts& g, const std::string& input, int top_k, double lambda) {
    auto in = open_file(input);
    PerformanceTable perf =
        ingest_performance(in, top_k > 0 ? std::optional<int>(top_k) : std::nullopt);
    auto raw = optimal_scores(perf, Lambda(lambda));

    std::ostringstream text;
    text << "raw:";
    for (double v : raw) text << " " << fmt2(v);
    text << "\n";
    json results{{"raw", raw}};
    if (raw.front() > raw.back()) {
        auto norm = normalize(raw);
        text << "normalized:";
        for (double v : norm) text << " " << std::llround(v);
        text << "\n";
        results["normalized"] = norm;
    } else {
        text << "normalized: (skipped, scores do not decrease)\n";
    }
    json inputs{{"input", input}, {"lambda", lambda}};
    if (top_k > 0) inputs["top_k"] = top_k;
    emit(g, "optimal", inputs, results, text.str());
    return 0;
}

int cmd_fit(const GlobalOpts& g, const std::string& fixture, const std::string& scores_csv,
            double p_lo, double p_hi, int grid) {
    std::vector<double> scores;
    if (!fixture.empty()) {
        scores = fixture_vector(fixture);
    } else if (!scores_csv.empty()) {
        for (const auto& field : split_csv_row(scores_csv)) {
            size_t pos = 0;
            double v = 0;
            try {
                v = std::stod(field, &pos);
            } catch (...) {
                throw std::invalid_argument("bad score '" + field + "' in --scores");
            }
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos])))
                ++pos;
            if (pos != field.size())
                throw std::invalid_argument("bad score '" + field + "' in --scores");
            scores.push_back(v);
        }
    } else {
        throw std::invalid_argument("pick an input: --fixture NAME or --scores LIST");
    }
    FitResult fit = fit_geometric(scores, p_lo, p_hi, grid);
    std::ostringstream text;
    text << "p = " << fmt3(fit.p) << "\nobjective = " << fit.objective << "\n";
    json inputs{{"p_lo", p_lo}, {"p_hi", p_hi}, {"grid", grid}};
    if (!fixture.empty()) inputs["fixture"] = fixture;
    if (!scores_csv.empty()) inputs["scores"] = scores_csv;
    emit(g, "fit", inputs, json{{"p", fit.p}, {"objective", fit.objective}}, text.str());
    return 0;
}

int cmd_calibrate(const GlobalOpts& g, double ref_record, double ref_lambda,
                  double target_record) {
    Lambda lambda = calibrate_lambda(ref_record, Lambda(ref_lambda), target_record);
    json inputs{{"ref_record", ref_record},
                {"ref_lambda", ref_lambda},
                {"target_record", target_record}};
    emit(g, "calibrate", inputs, json{{"lambda", lambda.value}},
         "lambda = " + fmt2(lambda.value) + "\n");
    return 0;
}

int cmd_replay(const GlobalOpts& g, const std::string& fixture) {
    ReplayOutcome outcome = replay_fixture(fixture);
    std::string text = outcome.text + (outcome.passed ? "PASS\n" : "FAIL\n");
    json results = outcome.results;
    results["passed"] = outcome.passed;
    emit(g, "replay", json{{"fixture", fixture}}, results, text);
    return outcome.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank aggregation for race series: scoring rules, axiom checks,\n"
                 "counterexample construction and optimal score estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("podium ") + podium::version);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "random seed for sampled checks")->capture_default_str();

    // scores
    auto* scores = app.add_subcommand("scores", "print a rule's score vectors");
    RuleOpts scores_rule;
    scores_rule.attach(scores, true);

    // rank
    auto* rank = app.add_subcommand("rank", "aggregate a race CSV into a ranking");
    RuleOpts rank_rule;
    std::string rank_input;
    bool rank_intersect = false;
    rank->add_option("--input,-i", rank_input, "race CSV (race_id,position,athlete)")
        ->required();
    rank->add_flag("--intersect", rank_intersect, "rank only athletes present in every race");
    rank_rule.attach(rank, false);

    // remove
    auto* remove = app.add_subcommand("remove", "re-rank after deleting an athlete");
    RuleOpts remove_rule;
    std::string remove_input, remove_athlete_id, remove_expect;
    bool remove_intersect = false;
    remove->add_option("--input,-i", remove_input, "race CSV")->required();
    remove->add_flag("--intersect", remove_intersect, "rank only athletes present in every race");
    remove->add_option("--athlete,-a", remove_athlete_id, "athlete to delete")->required();
    remove->add_option("--expect", remove_expect, "fail unless the verdict matches")
        ->check(CLI::IsMember({"changed", "unchanged"}));
    remove_rule.attach(remove, false);

    // check
    auto* check = app.add_subcommand("check", "test a rule against an axiom on random profiles");
    RuleOpts check_rule;
    std::string check_axiom_name;
    std::int64_t check_trials = 1000;
    int check_m_max = 6, check_n_max = 8;
    bool check_exhaustive = false;
    check
        ->add_option("--axiom", check_axiom_name,
                     "independence-unanimous-winner, independence-unanimous-loser, "
                     "majority-winner-first, majority-loser-never-first, "
                     "majority-loser-last or reversal-symmetry")
        ->required();
    check->add_option("--trials", check_trials, "sampled profiles")->capture_default_str();
    check->add_option("--m-max", check_m_max, "athletes per profile, at most")
        ->capture_default_str();
    check->add_option("--n-max", check_n_max, "races per profile, at most")
        ->capture_default_str();
    check->add_flag("--exhaustive", check_exhaustive,
                    "enumerate every profile up to the bounds (m, n <= 4)");
    check_rule.attach(check, false);

    // witness
    auto* witness = app.add_subcommand("witness", "construct counterexample profiles");
    witness->require_subcommand(1);

    auto* no_win = witness->add_subcommand(
        "no-race-win", "overall winner with zero race wins (geometric rules)");
    std::string no_win_p;
    int no_win_m = 0;
    no_win->add_option("--p", no_win_p, "finite geometric parameter")->required();
    no_win->add_option("--size,-m", no_win_m, "field size")->required()->check(
        CLI::PositiveNumber);

    auto* loser_top = witness->add_subcommand(
        "majority-loser-top", "majority loser finishing above the head-to-head winner (p > 1)");
    std::string loser_top_p;
    int loser_top_k = 0;
    loser_top->add_option("--p", loser_top_p, "geometric parameter above 1")->required();
    loser_top->add_option("--size,-k", loser_top_k, "field size")->required()->check(
        CLI::PositiveNumber);

    auto* flip = witness->add_subcommand(
        "removal-flip", "removing unanimous winners/losers flips a pairwise comparison");
    RuleOpts flip_rule;
    int flip_k = 0, flip_m = 0;
    std::string flip_side = "loser";
    flip->add_option("--size,-k", flip_k, "field size after the removal")
        ->required()
        ->check(CLI::PositiveNumber);
    flip->add_option("--full-size,-m", flip_m, "field size before removal (geometric rules)")
        ->check(CLI::PositiveNumber);
    flip->add_option("--side", flip_side, "which unanimous athletes pad the field")
        ->check(CLI::IsMember({"winner", "loser"}));
    flip_rule.attach(flip, false);

    // optimal
    auto* optimal = app.add_subcommand("optimal", "estimate scores from performance data");
    std::string optimal_input;
    int optimal_top_k = 0;
    double optimal_lambda = 1.0;
    optimal->add_option("--input,-i", optimal_input, "CSV (race_id,position,performance)")
        ->required();
    optimal->add_option("--top-k", optimal_top_k, "keep only the best k positions")
        ->check(CLI::PositiveNumber);
    optimal->add_option("--lambda", optimal_lambda, "risk attitude (> 0)")
        ->capture_default_str();

    // fit
    auto* fit = app.add_subcommand("fit", "fit the geometric parameter to a score vector");
    std::string fit_fixture, fit_scores;
    double fit_lo = 0.01, fit_hi = 100.0;
    int fit_grid = 2000;
    fit->add_option("--fixture", fit_fixture,
                    "bundled vector: ibu-score, ibu-prize, motogp, diamond-borda, "
                    "pga-score-reconstructed, pga-prize-reconstructed");
    fit->add_option("--scores", fit_scores, "comma-separated score list");
    fit->add_option("--p-lo", fit_lo, "grid lower bound")->capture_default_str();
    fit->add_option("--p-hi", fit_hi, "grid upper bound")->capture_default_str();
    fit->add_option("--grid", fit_grid, "coarse grid points")->capture_default_str();

    // calibrate
    auto* calibrate = app.add_subcommand("calibrate", "carry a risk attitude across disciplines");
    double cal_ref_record = 0, cal_ref_lambda = 0, cal_target = 0;
    calibrate->add_option("--ref-record", cal_ref_record, "record in the reference discipline")
        ->required();
    calibrate->add_option("--ref-lambda", cal_ref_lambda, "lambda in the reference discipline")
        ->required();
    calibrate->add_option("--target-record", cal_target, "record in the target discipline")
        ->required();

    // replay
    auto* replay = app.add_subcommand("replay", "run a bundled episode and assert its numbers");
    std::string replay_fixture_name;
    replay->add_option("--fixture", replay_fixture_name, "table1, table2, table3 or table4")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (scores->parsed()) return cmd_scores(g, scores_rule);
        if (rank->parsed()) return cmd_rank(g, rank_rule, rank_input, rank_intersect);
        if (remove->parsed())
            return cmd_remove(g, remove_rule, remove_input, remove_intersect,
                              remove_athlete_id, remove_expect);
        if (check->parsed())
            return cmd_check(g, check_rule, check_axiom_name, check_trials, check_m_max,
                             check_n_max, check_exhaustive);
        if (no_win->parsed()) {
            Witness w = no_race_win_winner(GeometricParam::parse(no_win_p), no_win_m);
            return emit_witness(g, "witness.no-race-win",
                                json{{"p", no_win_p}, {"size", no_win_m}}, w);
        }
        if (loser_top->parsed()) {
            Witness w = majority_loser_first(rat_from_string(loser_top_p), loser_top_k);
            return emit_witness(g, "witness.majority-loser-top",
                                json{{"p", loser_top_p}, {"size", loser_top_k}}, w);
        }
        if (flip->parsed()) {
            ScoreTable table = flip_rule.build(flip_m);
            Witness w = independence_violation(table, flip_k,
                                               flip_side == "winner" ? IndependenceSide::Winner
                                                                     : IndependenceSide::Loser);
            json inputs = flip_rule.describe();
            inputs["size"] = flip_k;
            inputs["side"] = flip_side;
            return emit_witness(g, "witness.removal-flip", std::move(inputs), w);
        }
        if (optimal->parsed())
            return cmd_optimal(g, optimal_input, optimal_top_k, optimal_lambda);
        if (fit->parsed())
            return cmd_fit(g, fit_fixture, fit_scores, fit_lo, fit_hi, fit_grid);
        if (calibrate->parsed())
            return cmd_calibrate(g, cal_ref_record, cal_ref_lambda, cal_target);
        if (replay->parsed()) return cmd_replay(g, replay_fixture_name);
        std::cerr << "no command\n";
        return 2;
    } catch (const no_witness_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
