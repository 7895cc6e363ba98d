#include "doctest.h"
#include "support.hpp"

#include "zdlat/cli.hpp"
#include "zdlat/fixtures.hpp"
#include "zdlat/verify.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace zdlat;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

const std::string kFigure1 = testing::data_path("figure1.lat");
const std::string kExample = testing::data_path("example_1_7_n6.lat");

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "zdlat-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text)
{
    auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("check")
{
    Run fig = run({"check", kFigure1});
    CHECK(fig.code == kExitOk);
    CHECK(has(fig.out, "elements: 9\n"));
    CHECK(has(fig.out, "distributive: yes\n"));
    CHECK_FALSE(has(fig.out, "forbidden sublattice"));

    Run ex = run({"check", kExample});
    CHECK(ex.code == kExitOk);
    CHECK(has(ex.out, "distributive: no\n"));
    CHECK(has(ex.out, "forbidden sublattice: M3 "));

    Run bad = run({"check", write_scratch("bad.lat", "elements: 0 1\ncovers: 0<2\n")});
    CHECK(bad.code == kExitUsage);
    CHECK(has(bad.err, "line 2, column"));

    Run cyc = run({"check", write_scratch("cycle.lat", "elements: 0 a b 1\ncovers: 0<a, a<b, b<a, b<1\n")});
    CHECK(cyc.code == kExitUsage);

    CHECK(run({"check", "/nonexistent/file.lat"}).code == kExitUsage);
}

TEST_CASE("check with claims")
{
    Run held = run({"check", kFigure1, "--claim", "P1.3", "--claim", "T1.5a"});
    CHECK(held.code == kExitOk);
    CHECK(has(held.out, "ideal: {0}\n"));
    CHECK(has(held.out, "P1.3 HOLDS vertices=4 diameter=2 girth=4"));

    Run failed = run({"check", kFigure1, "--ideal-principal", "z", "--claim", "P2.1-CONTAINED"});
    CHECK(failed.code == kExitFailed);
    CHECK(has(failed.out, "P2.1-CONTAINED FAILS"));

    Run all = run({"check", kExample, "--all-claims", "--ideal", "0,S4,S4-5,S4-6"});
    CHECK(all.code == kExitFailed); // GAMMA0
    CHECK(has(all.out, "P1.6 VACUOUS hypothesis_set={S1-6,S4-6}"));
    CHECK(has(all.out, "T2.3 VACUOUS"));

    Run json = run({"check", kFigure1, "--ideal", "0,a,c", "--claim", "P2.1-CONTAINING", "--json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["distributive"] == true);
    CHECK(j["ideal"] == nlohmann::json::array({"0", "c", "a"}));
    CHECK(j["claims"][0]["status"] == "HOLDS");

    CHECK(run({"check", kFigure1, "--claim", "X"}).code == kExitUsage);
    CHECK(run({"check", kFigure1, "--ideal", "0,a", "--claim", "P1.3"}).code == kExitUsage);
    CHECK(run({"check", kFigure1, "--ideal", "0", "--ideal-principal", "a"}).code == kExitUsage);
}

TEST_CASE("zdgraph")
{
    Run def = run({"zdgraph", kFigure1});
    CHECK(def.code == kExitOk);
    CHECK(def.out.rfind("|V| = 4\n", 0) == 0);
    CHECK(has(def.out, "edges: 4\n"));

    CHECK(run({"zdgraph", kFigure1, "--gamma-classic"}).out.rfind("|V| = 5\n", 0) == 0);
    CHECK(run({"zdgraph", kFigure1, "--ideal-principal", "z"}).out.rfind("|V| = 0\n", 0) == 0);

    Run dot = run({"zdgraph", kFigure1, "--dot"});
    CHECK(dot.out.rfind("graph zd {", 0) == 0);
    CHECK(has(dot.out, "c -- x;"));

    auto j = nlohmann::json::parse(run({"zdgraph", kFigure1, "--json"}).out);
    CHECK(j["vertices"].size() == 4);
    CHECK(j["girth"] == 4);
    CHECK(j["clique_number"] == 2);
    auto empty = nlohmann::json::parse(run({"zdgraph", kFigure1, "--ideal-principal", "z", "--json"}).out);
    CHECK(empty["girth"] == "ACYCLIC");

    Run improper = run({"zdgraph", kFigure1, "--ideal-principal", "1"});
    CHECK(improper.code == kExitUsage);
    CHECK(has(improper.err, "whole lattice"));
    CHECK(run({"zdgraph", kFigure1, "--ideal", "a"}).code == kExitUsage);
}

TEST_CASE("radical")
{
    Run contained = run({"radical", kFigure1, "--ideal-principal", "z", "--variant", "contained"});
    CHECK(contained.code == kExitOk);
    CHECK(has(contained.out, "√I = {0,a,c} ≠ I\n"));
    CHECK(has(contained.out, "primes contained: 2\n"));

    CHECK(has(run({"radical", kFigure1, "--ideal-principal", "z", "--variant", "containing"}).out, "√I = I\n"));

    Run zero = run({"radical", kFigure1, "--variant", "contained"});
    CHECK(has(zero.out, "no prime contained in I\n"));
    CHECK(has(zero.out, "primes contained: 0\n"));

    CHECK(run({"radical", kFigure1, "--variant", "around"}).code == kExitUsage);
}

TEST_CASE("ideals")
{
    Run all = run({"ideals", kFigure1});
    CHECK(all.code == kExitOk);
    CHECK(has(all.out, "{0,a,c} prime\n"));
    CHECK(has(all.out, "ideals: 9  prime: 4\n"));
    Run q = run({"ideals", kFigure1, "--quotient", "a"});
    CHECK(has(q.out, "(I:a) = {0,b,x}\n"));
}

TEST_CASE("verify-paper")
{
    Run first = run({"verify-paper"});
    CHECK(first.code == kExitOk);
    CHECK(has(first.out, "checks passed\n"));
    CHECK_FALSE(has(first.out, "FAIL"));
    CHECK(run({"verify-paper"}).out == first.out);

    // Moving y's cover from z to a changes Gamma and the (z] radical.
    std::string corrupted(kFigure1Text);
    corrupted.replace(corrupted.rfind("y<z"), 3, "y<a");
    Run broken = run({"verify-paper", "--figure1-file", write_scratch("corrupt.lat", corrupted)});
    CHECK(broken.code == kExitFailed);
    CHECK(has(broken.out, "FAIL figure1."));
    CHECK(has(broken.out, "checks failed\n"));

    auto checks = verify_paper(corrupted);
    CHECK_FALSE(all_passed(checks));
    CHECK(checks[0].passed); // still parses
}

TEST_CASE("census and search")
{
    Run census = run({"census", "--max-size", "5"});
    CHECK(census.out.rfind("lattices: 1 1 1 2 5\n", 0) == 0);
    CHECK(census.code == kExitFailed);
    CHECK(run({"census", "--max-size", "5", "--workers", "4"}).out == census.out);

    Run clean = run({"census", "--max-size", "6", "--distributive-only", "--claims", "P1.3,T1.5a,P2.1-CONTAINING"});
    CHECK(clean.code == kExitOk);
    CHECK(has(clean.out, "counterexamples: 0\n"));

    Run big = run({"census", "--max-size", "8"});
    CHECK(big.code == kExitUsage);
    CHECK(run({"census", "--max-size", "9", "--allow-8"}).code == kExitUsage);
    CHECK(run({"census", "--ideals", "odd"}).code == kExitUsage);
    CHECK(run({"census", "--claims", "P1.3,NOPE"}).code == kExitUsage);

    auto dir = scratch("out");
    std::filesystem::remove_all(dir);
    Run found = run({"search", "P2.1-CONTAINED", "--max-size", "3", "--out", dir.string()});
    CHECK(found.code == kExitFailed);
    CHECK(has(found.out, "counterexample: n3-1 (3 elements) ideal {0,a}\n"));
    CHECK(std::filesystem::exists(dir / "P2.1-CONTAINED-1.lat"));
    Run replay = run({"check", (dir / "P2.1-CONTAINED-1.lat").string(), "--ideal", "0,a", "--claim", "P2.1-CONTAINED"});
    CHECK(replay.code == kExitFailed);

    Run none = run({"search", "P2.1-CONTAINING", "--max-size", "7"});
    CHECK(none.code == kExitOk);
    CHECK(has(none.out, "no counterexample"));
    CHECK(run({"search", "BOGUS"}).code == kExitUsage);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"check"}).code == kExitUsage);
    Run help = run({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(has(help.out, "verify-paper"));
}
