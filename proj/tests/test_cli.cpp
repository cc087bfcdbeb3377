#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("PODIUM_CLI");
    REQUIRE(p != nullptr);
    return p;
}

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = cli_path() + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = -1;
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
    return {code, out};
}

std::string write_temp(const char* name, const std::string& content) {
    std::string path = std::string("/tmp/podium_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const std::string kRaces =
    "race_id,position,athlete\n"
    "r1,1,ana\nr1,2,bo\nr1,3,cy\n"
    "r2,1,bo\nr2,2,ana\nr2,3,cy\n";

}  // namespace

TEST_CASE("scores prints geometric vectors", "[cli]") {
    auto r = run("scores --p 2 --size 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "round 1: 8 4 2 1\n");

    auto plu = run("scores --p inf --size 3");
    CHECK(plu.out == "round 1: 1 0 0\nround 2: 1 1 0\n");

    auto tb = run("scores --p 1 --size 3 --tiebreak plurality");
    CHECK(tb.out == "round 1: 2 1 0\nround 2: 1 0 0\n");
}

TEST_CASE("scores from a table file honours trimming", "[cli]") {
    auto path = write_temp("table.csv", "position,score\n1,4\n2,3\n3,2\n4,0\n");
    auto bottom = run("scores --table " + path + " --size 3");
    CHECK(bottom.out == "round 1: 4 3 2\n");
    auto top = run("scores --table " + path + " --trim top --size 3");
    CHECK(top.out == "round 1: 3 2 0\n");
}

TEST_CASE("rank aggregates a race file", "[cli]") {
    auto path = write_temp("races.csv", kRaces);
    auto r = run("rank -i " + path + " --p 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == " 1. ana, bo  3  (tied)\n 3. cy  0\n");

    auto j = run("--format json rank -i " + path + " --p 1");
    auto doc = json::parse(j.out);
    CHECK(doc["command"] == "rank");
    CHECK(doc["inputs"]["p"] == "1");
    CHECK(doc["results"]["ranking"]["groups"][0] == json::array({"ana", "bo"}));
    CHECK(doc["results"]["ranking"]["totals"]["cy"][0] == "0");
    CHECK(doc["provenance"]["version"].is_string());
    CHECK(doc["provenance"]["seed"] == 42);
}

TEST_CASE("rank rejects mismatched fields without intersect", "[cli]") {
    auto path = write_temp("mismatch.csv",
                           "race_id,position,athlete\n"
                           "r1,1,ana\nr1,2,bo\nr1,3,cy\n"
                           "r2,1,bo\nr2,2,ana\n");
    auto fail = run("rank -i " + path + " --p 1", true);
    CHECK(fail.exit_code == 2);
    CHECK(fail.out.find("use --intersect") != std::string::npos);
    auto ok = run("rank -i " + path + " --p 1 --intersect");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("cy") == std::string::npos);
}

TEST_CASE("remove reports a verdict and honours --expect", "[cli]") {
    auto path = write_temp("races.csv", kRaces);
    auto r = run("remove -i " + path + " -a cy --p 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("UNCHANGED\n") != std::string::npos);
    CHECK(run("remove -i " + path + " -a cy --p 1 --expect unchanged").exit_code == 0);
    CHECK(run("remove -i " + path + " -a cy --p 1 --expect changed").exit_code == 1);
    CHECK(run("remove -i " + path + " -a nobody --p 1", true).exit_code == 2);
}

TEST_CASE("check exits by violation count", "[cli]") {
    CHECK(run("check --axiom majority-winner-first --p inf --exhaustive --m-max 3 --n-max 3")
              .exit_code == 0);
    auto r = run("check --axiom majority-winner-first --p 1 --exhaustive --m-max 3 --n-max 3");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("first counterexample") != std::string::npos);
    CHECK(run("check --axiom nonsense --p 1", true).exit_code == 2);
}

TEST_CASE("check is reproducible for a fixed seed", "[cli]") {
    std::string cmd =
        "--format json --seed 7 check --axiom reversal-symmetry --p 2 --trials 80 "
        "--m-max 4 --n-max 5";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.out == b.out);
    auto doc = json::parse(a.out);
    CHECK(doc["results"]["trials"] == 80);
    CHECK(doc["provenance"]["seed"] == 7);
}

TEST_CASE("witness subcommands emit verified profiles", "[cli]") {
    auto r = run("witness no-race-win --p 1 -m 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("despite winning none") != std::string::npos);

    auto j = run("--format json witness majority-loser-top --p 2 --size 3");
    auto doc = json::parse(j.out);
    CHECK(doc["results"]["profile"]["races"].size() == 17);
    CHECK(doc["results"]["claim"].is_string());

    // geometric rules admit no removal witness
    auto none = run("witness removal-flip --p 2 --full-size 5 -k 4 --side winner", true);
    CHECK(none.exit_code == 1);
    CHECK(none.out.find("no witness exists") != std::string::npos);

    auto path = write_temp("table.csv", "position,score\n1,4\n2,3\n3,2\n4,0\n");
    auto flip = run("--format json witness removal-flip --table " + path +
                    " --trim top -k 3 --side loser");
    CHECK(flip.exit_code == 0);
    auto fdoc = json::parse(flip.out);
    CHECK(fdoc["results"]["profile"]["races"].size() == 15);
    CHECK(fdoc["results"].contains("reduced_verification"));
}

TEST_CASE("optimal, fit and calibrate", "[cli]") {
    auto path = write_temp("perf.csv",
                           "race_id,position,performance\n"
                           "r1,1,3\nr1,2,1\nr1,3,2\n"
                           "r2,1,0\nr2,2,2\nr2,3,1\n");
    auto r = run("optimal -i " + path + " --lambda 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "raw: 2.50 1.50 0.50\nnormalized: 100 50 0\n");

    auto fit = run("fit --scores \"8,7,6,5,4,3,2,1,0\"");
    CHECK(fit.exit_code == 0);
    CHECK(fit.out.find("p = 1.000\n") != std::string::npos);

    auto fj = run("--format json fit --fixture ibu-prize");
    auto doc = json::parse(fj.out);
    CHECK(std::abs(doc["results"]["p"].get<double>() - 1.2441810348305955) < 1e-6);

    auto cal = run("calibrate --ref-record 9.58 --ref-lambda 100 --target-record 21.34");
    CHECK(cal.out == "lambda = 7.90\n");

    CHECK(run("fit --scores \"1,2,3\"", true).exit_code == 2);
}

TEST_CASE("replay runs the bundled episodes", "[cli]") {
    for (const char* f : {"table1", "table2", "table3", "table4"}) {
        auto r = run(std::string("replay --fixture ") + f);
        INFO(f);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("PASS") != std::string::npos);
        CHECK(r.out.find("FAIL") == std::string::npos);
        // byte-stable across runs
        auto again = run(std::string("replay --fixture ") + f);
        CHECK(again.out == r.out);
    }
    auto bad = run("replay --fixture table9", true);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run("no-such-command", true).exit_code == 2);
    CHECK(run("rank --p 1", true).exit_code == 2);          // missing --input
    CHECK(run("scores --p 2", true).exit_code == 2);        // missing --size
    CHECK(run("scores --p -3 --size 4", true).exit_code == 2);
    CHECK(run("--help").exit_code == 0);
    CHECK(run("--version").exit_code == 0);
}
