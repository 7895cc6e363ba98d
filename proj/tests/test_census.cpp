#include "doctest.h"
#include "support.hpp"

#include "zdlat/census.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace zdlat;

TEST_CASE("lattice counts by size")
{
    auto all = enumerate_lattices(7);
    std::vector<std::size_t> counts(7, 0);
    for (const auto& c : all)
        ++counts[c.lattice.size() - 1];
    CHECK(counts == std::vector<std::size_t>{1, 1, 1, 2, 5, 15, 53});
    CHECK(all.front().id == "n1-1");
    CHECK(all.back().id == "n7-53");
}

TEST_CASE("generated lattices are the brute-force isomorphism classes")
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> generated;
        for (const auto& c : testing::census(n))
            if (static_cast<int>(c.lattice.size()) == n)
                CHECK(generated.insert(oracle::canonical_order(testing::to_oracle(c.lattice))).second);
        CHECK(generated == oracle::lattice_classes(n));
    }
}

TEST_CASE("census labels and layout")
{
    for (const auto& c : testing::census(7)) {
        const Lattice& l = c.lattice;
        CHECK(l.bottom() == 0);
        CHECK(l.top() == l.size() - 1);
        CHECK(l.label(0) == "0");
        if (l.size() > 1)
            CHECK(l.label(l.top()) == "1");
        for (Element a = 0; a < l.size(); ++a)
            for (Element b = 0; b < a; ++b)
                CHECK_FALSE(l.leq(a, b));
    }
    auto four = enumerate_lattices(4);
    CHECK(four[3].id == "n4-1");
    CHECK(four[3].lattice.upper_covers(0).size() == 2);
    CHECK(four[4].id == "n4-2");
}

TEST_CASE("bounds")
{
    CHECK_THROWS_AS(enumerate_lattices(0), PreconditionError);
    CHECK_THROWS_AS(enumerate_lattices(9), PreconditionError);
    CensusConfig config;
    config.max_size = 8;
    CHECK_THROWS_AS(config.validate(), PreconditionError);
    config.allow_size_8 = true;
    CHECK_NOTHROW(config.validate());
    config.worker_count = 0;
    CHECK_THROWS_AS(config.validate(), PreconditionError);
    config.worker_count = 1;
    config.claims.clear();
    CHECK_THROWS_AS(config.validate(), PreconditionError);
    CHECK(parse_ideal_filter("principal") == IdealFilter::principal);
    CHECK_FALSE(parse_ideal_filter("prime"));
}

TEST_CASE("census summary text")
{
    CensusConfig config;
    config.max_size = 5;
    CensusSummary s = run_census(config);
    std::string text = format_summary(s);
    CHECK(text.rfind("lattices: 1 1 1 2 5\n", 0) == 0);
    CHECK(s.instance_count == 29);
    for (const auto& [id, t] : s.per_claim)
        CHECK(t.total() == s.instance_count);

    config.ideal_filter = IdealFilter::all;
    CHECK(run_census(config).instance_count == 39);
    config.distributive_only = true;
    CensusSummary d = run_census(config);
    CHECK(d.swept_counts == std::vector<std::size_t>{1, 1, 1, 2, 3});
}

TEST_CASE("census output does not depend on the worker count")
{
    CensusConfig config;
    config.max_size = 6;
    config.worker_count = 1;
    const std::string one = format_summary(run_census(config));
    const std::string one_json = summary_to_json(run_census(config)).dump();
    for (std::size_t workers : {2, 3, 4, 8}) {
        config.worker_count = workers;
        CHECK(format_summary(run_census(config)) == one);
        CHECK(summary_to_json(run_census(config)).dump() == one_json);
    }
}

TEST_CASE("graph statements over distributive lattices up to size 8")
{
    CensusConfig config;
    config.max_size = 8;
    config.allow_size_8 = true;
    config.distributive_only = true;
    config.claims = {ClaimId::P1_3, ClaimId::L1_4, ClaimId::T1_5a, ClaimId::T1_5b, ClaimId::CASE4,
                     ClaimId::P2_1_containing, ClaimId::T2_3};
    CensusSummary s = run_census(config);
    CHECK(s.swept_counts.back() == 15);
    for (const auto& [id, t] : s.per_claim)
        CHECK(t.fails == 0);
    CHECK(s.cyclic_instances > 0);
    CHECK(s.cyclic_core_or_pendant == s.cyclic_instances);
    for (const auto& [g, n] : s.girth_histogram)
        CHECK((g == 3 || g == 4));
    CHECK(s.counterexamples.empty());
}

TEST_CASE("counterexample search")
{
    auto p21 = search_counterexample(ClaimId::P2_1_contained, 3);
    REQUIRE(p21);
    CHECK(p21->lattice_id == "n3-1");
    CHECK(format_set(p21->lattice, p21->ideal.members()) == "{0,a}");
    CHECK(p21->report.status == ClaimStatus::fails);

    CHECK_FALSE(search_counterexample(ClaimId::P2_1_containing, 7));
    CHECK_FALSE(search_counterexample("T1.5a", 7));
    CHECK_FALSE(search_counterexample(ClaimId::P2_1_contained, 2));

    auto g0 = search_counterexample("GAMMA0", 4);
    REQUIRE(g0);
    CHECK(g0->lattice_id == "n4-1");
    CHECK_THROWS_AS(search_counterexample("nope", 4), PreconditionError);
}

TEST_CASE("counterexample files replay")
{
    auto hit = search_counterexample(ClaimId::P2_1_contained, 3);
    REQUIRE(hit);
    std::string text = counterexample_file(*hit);
    CHECK(text.find("# replay: zdlat check <this file> --ideal 0,a --claim P2.1-CONTAINED") != std::string::npos);
    Lattice back = parse_and_build(text);
    CHECK(back.fingerprint() == hit->lattice.fingerprint());
    IdealSet ideal = ideal_from_labels(back, "0,a");
    CHECK(check_claim(ClaimId::P2_1_contained, back, ideal).status == ClaimStatus::fails);

    auto dir = std::filesystem::temp_directory_path() / "zdlat-census-test";
    std::filesystem::remove_all(dir);
    CensusConfig config;
    config.max_size = 4;
    CensusSummary s = run_census(config);
    auto written = write_counterexamples(s.counterexamples, dir, 2);
    CHECK_FALSE(written.empty());
    for (const auto& p : written) {
        std::ifstream in(p);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK_NOTHROW(parse_and_build(buf.str()));
    }
    std::filesystem::remove_all(dir);
}
