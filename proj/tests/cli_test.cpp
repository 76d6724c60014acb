#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "plotkin/cli.hpp"

using namespace plotkin;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kSrc = PLOTKIN_SOURCE_DIR;

std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / "plotkin_cli_test";
    std::filesystem::create_directories(d);
    return d;
}

// "d=" may only appear in an Exact statement.
bool exact_only(const std::string& text) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (std::regex_search(line, std::regex("(^|[^A-Za-z<>])d=")) && line.find("Exact") == std::string::npos &&
            line.find("(propagated)") == std::string::npos)
            return false;
    return true;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints parameters and propagated bounds") {
    auto r = run({"eval", kSrc + "/recipes/c122_91.rcp"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("[122,91] d>=7 (propagated)\n", 0) == 0);

    const auto out = (temp_dir() / "c.mat").string();
    r = run({"eval", kSrc + "/recipes/c122_91.rcp", "--table", kSrc + "/fixtures/paper_sixteen.tbl", "--out", out});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("[122,91] d>=12 (propagated)\n", 0) == 0);
    CHECK(r.out.find("C2 [61,40]") != std::string::npos);
    CHECK(std::filesystem::exists(out));

    r = run({"eval", kSrc + "/recipes/ingredients/q4_n64_k54.rcp"});
    CHECK(r.out.find("d=") == std::string::npos);
}

TEST_CASE("eval reports exact distances only when known") {
    const auto p = temp_dir() / "h.rcp";
    std::ofstream(p) << "c = cyclic(2, 7, \"x^3+x+1\")\n";
    auto r = run({"eval", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "[7,4] d=3 (propagated)\n");
}

TEST_CASE("distance subcommand") {
    const auto m = (temp_dir() / "hamming7.mat").string();
    std::ofstream(m) << "2 7 4\n1 0 0 0 1 1 0\n0 1 0 0 1 0 1\n0 0 1 0 0 1 1\n0 0 0 1 1 1 1\n";
    auto r = run({"distance", m, "--method", "exhaustive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Exact d=3\n") != std::string::npos);

    r = run({"distance", m, "--method", "bz"});
    CHECK(r.out.find("Exact d=3\n") != std::string::npos);

    r = run({"distance", m, "--method", "witness", "--seed", "9", "--budget", "100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("seed=9") != std::string::npos);
    CHECK(r.out.find("WitnessOnly d<=3") != std::string::npos);
    CHECK(exact_only(r.out));

    r = run({"distance", m, "--method", "bz", "--budget", "1"});
    CHECK(r.out.find("BoundsOnly d>=1 d<=4") != std::string::npos);
    CHECK(exact_only(r.out));

    r = run({"distance", m, "--method", "exhaustive", "--budget", "4"});
    CHECK(r.code == 2);
}

TEST_CASE("distance with a table marks ingested bounds") {
    const auto m = (temp_dir() / "c61.mat").string();
    auto r = run({"eval", kSrc + "/recipes/ingredients/q4_n61_k40.rcp", "--out", m});
    REQUIRE(r.code == 0);
    r = run({"distance", m, "--method", "witness", "--target", "12", "--table", kSrc + "/fixtures/paper_sixteen.tbl"});
    CHECK(r.code == 0);
    CHECK(r.out.find("WitnessOnly d<=12") != std::string::npos);
    CHECK(r.out.find("table: d>=12 (ingested, not certified)") != std::string::npos);
}

TEST_CASE("scan and stats") {
    const auto tbl = kSrc + "/fixtures/paper_sixteen.tbl";
    auto r = run({"scan", "--table", tbl, "--q", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("q\tlength\tk\tplotkin_d", 0) == 0);
    CHECK(r.out.find("4\t126\t95\t12\t11\t-\tImproves\t63\t53\t42\n") != std::string::npos);

    const auto tsv = (temp_dir() / "f.tsv").string();
    r = run({"scan", "--table", tbl, "--q", "4", "--nmin", "60", "--nmax", "64", "--out", tsv});
    CHECK(r.code == 0);
    CHECK(r.out.find("Improves: 3") != std::string::npos);
    CHECK(std::filesystem::exists(tsv));

    r = run({"stats", "--table", tbl});
    CHECK(r.code == 0);
    for (const char* row : {"2\t16512\t", "3\t14762\t", "4\t16512\t", "5\t4290\t", "7\t2550\t", "8\t4290\t", "9\t4290\t"})
        CHECK(r.out.find(row) != std::string::npos);
}

TEST_CASE("usage and data errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"stats"}).code == 1);
    CHECK(run({"stats", "--table", kSrc + "/fixtures/paper_sixteen.tbl", "--bogus"}).code == 1);
    CHECK(run({"distance", kSrc + "/fixtures/paper_sixteen.tbl", "--method", "magic"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    auto bad = temp_dir() / "bad.tbl";
    std::ofstream(bad) << "4 10 11 2 3\n";
    auto r = run({"stats", "--table", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("bad.tbl:1") != std::string::npos);

    auto rcp = temp_dir() / "bad.rcp";
    std::ofstream(rcp) << "c = cyclic(4,65,\"x^2\")\n";
    r = run({"eval", rcp.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1, column 1") != std::string::npos);

    CHECK(run({"scan", "--table", kSrc + "/fixtures/paper_sixteen.tbl", "--q", "6"}).code == 2);
}

TEST_CASE("thread default comes from the environment") {
    setenv("PLOTKIN_THREADS", "3", 1);
    CHECK(default_threads() == 3);
    setenv("PLOTKIN_THREADS", "zero", 1);
    CHECK(default_threads() == 1);
    unsetenv("PLOTKIN_THREADS");
    CHECK(default_threads() == 1);
}

}
