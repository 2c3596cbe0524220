#include "doctest.h"
#include "maskcheck/report.hpp"

using namespace maskcheck;

TEST_CASE("every report carries the schema tag") {
    CHECK(report::header("x")["schema"] == "maskcheck/1");
    CHECK(report::bias(bias_profile(8, Modulus(4)))["schema"] == "maskcheck/1");
    CHECK(report::bounds(WidthConfig(Modulus(5), 8))["schema"] == "maskcheck/1");
}

TEST_CASE("census json does not depend on the worker count") {
    const auto one = report::census(run_census(Modulus(4), 1), false).dump();
    const auto many = report::census(run_census(Modulus(4), 6), false).dump();
    CHECK(one == many);
    CHECK(report::census(run_census(Modulus(2)), true).contains("wall_time_seconds"));
    CHECK(report::census_csv(run_census(Modulus(2))) ==
          "q,verdict,count\n2,VALUE_INDEPENDENT,4\n2,CONSTANT_MARGINAL_ONLY,2\n2,NON_CONSTANT_MARGINAL,10\n");
}

TEST_CASE("bias report") {
    const auto j = report::bias(bias_profile(4096, Modulus(3329)));
    CHECK(j["counts"][0] == 2);
    CHECK(j["counts"][767] == 1);
    CHECK(j["ratio"] == "2/1");
    CHECK(j["bounds_verified"] == true);
    const auto big = report::bias(bias_profile(4096, Modulus(8380417)));
    CHECK(big["counts"].is_null());
    CHECK(big["ratio"] == "DEGENERATE");
    CHECK(big["runs"].size() == 2);
}

TEST_CASE("bounds report") {
    const auto j = report::bounds(WidthConfig(Modulus(8380417), 24));
    CHECK(j["admissible"] == true);
    CHECK(j["intermediate_min"] == 1);
    CHECK(j["intermediate_max"] == 16760833);
    CHECK(report::bounds(WidthConfig(Modulus(8388608), 24))["admissible"] == false);
}

TEST_CASE("urem check is reproducible from the seed") {
    const WidthConfig cfg(Modulus(3329), 24);
    const auto a = report::urem_check(cfg, 5, 1000);
    const auto b = report::urem_check(cfg, 5, 1000);
    CHECK(report::urem(a).dump() == report::urem(b).dump());
    CHECK(a.mode == "sampled");
    CHECK(a.mismatches == 0);
    const auto small = report::urem_check(WidthConfig(Modulus(7), 24), 5, 1000);
    CHECK(small.mode == "exhaustive");
    CHECK(small.pairs == 49);
}

TEST_CASE("witness and classify reports") {
    const auto w = report::witness_check(Modulus(5), 1, 20);
    CHECK(w.verdict == Verdict::ConstantMarginalOnly);
    CHECK(w.row == std::vector<std::uint64_t>{4, 1});
    CHECK(w.counterexample_holds);
    CHECK(w.translation_failures == 0);
    const auto j = report::classify(t6_witness(Modulus(5)));
    CHECK(j["verdict"] == "CONSTANT_MARGINAL_ONLY");
    CHECK(j["mutual_information"]["bits"] == 0.0);
    CHECK(j["histogram"].size() == 5);
}
