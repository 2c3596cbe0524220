#include "doctest.h"
#include "maskcheck/rng_bias.hpp"
#include "maskcheck/streams.hpp"

using namespace maskcheck;

TEST_CASE("N=4096 q=3329 instance") {
    const BiasProfile p = bias_profile(4096, Modulus(3329));
    CHECK(p.count(0) == 2);
    CHECK(p.count(767) == 1);
    CHECK(p.count(766) == 2);
    CHECK(p.count(3328) == 1);
    REQUIRE(p.ratio().has_value());
    CHECK(*p.ratio() == Rational{2, 1});
    CHECK(p.ratio()->to_string() == "2/1");
    CHECK_FALSE(p.divides_exactly());
    CHECK(verify_bounds(p));
}

TEST_CASE("divisible and degenerate sample spaces") {
    const BiasProfile even = bias_profile(8, Modulus(4));
    CHECK(even.counts() == std::vector<std::uint64_t>{2, 2, 2, 2});
    CHECK(*even.ratio() == Rational{1, 1});
    CHECK(even.divides_exactly());

    const BiasProfile sparse = bias_profile(4096, Modulus(8380417));
    CHECK(sparse.count(0) == 1);
    CHECK(sparse.count(4095) == 1);
    CHECK(sparse.count(4096) == 0);
    CHECK(sparse.min_count() == 0);
    CHECK_FALSE(sparse.ratio().has_value());
    CHECK(verify_bounds(sparse));

    const BiasProfile multiple = bias_profile(3329 * 7, Modulus(3329));
    CHECK(verify_bounds(multiple));
    CHECK(multiple.min_count() == 7);
    CHECK(multiple.max_count() == 7);

    const BiasProfile five = bias_profile(4096, Modulus(5));
    CHECK(verify_bounds(five));
    CHECK(five.counts() == std::vector<std::uint64_t>{820, 819, 819, 819, 819});

    CHECK_THROWS_AS(bias_profile(0, Modulus(5)), PreconditionViolation);
    CHECK_THROWS_AS(sparse.counts(1000), CapExceeded);
    CHECK_THROWS_AS(five.count(5), PreconditionViolation);
}

TEST_CASE("closed form matches direct iteration for N <= 10000, q <= 100") {
    for (std::uint64_t q = 1; q <= 100; ++q) {
        const Modulus m(q);
        std::vector<std::uint64_t> direct(q, 0);
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            ++direct[(n - 1) % q];
            const BiasProfile p = bias_profile(n, m);
            for (std::uint64_t r = 0; r < q; ++r) {
                if (p.count(r) != direct[r] || residue_count(n, m, r) != direct[r]) {
                    FAIL("count mismatch at N = " << n << ", q = " << q << ", r = " << r);
                }
            }
        }
    }
}

TEST_CASE("floor/ceil bounds on random (N, q)") {
    auto rng = named_stream(42, "unit.rng_bias.bounds");
    std::uniform_int_distribution<std::uint64_t> draw_n(1, std::uint64_t{1} << 32);
    std::uniform_int_distribution<std::uint64_t> draw_q(1, std::uint64_t{1} << 24);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = draw_n(rng), q = draw_q(rng);
        const BiasProfile p = bias_profile(n, Modulus(q));
        REQUIRE(verify_bounds(p));
        std::uint64_t sum = 0;
        for (const CountRun& run : p.runs()) {
            REQUIRE(run.count >= n / q);
            REQUIRE(run.count <= (n + q - 1) / q);
            sum += run.count * (run.last - run.first);
        }
        REQUIRE(sum == n);
    }
}

TEST_CASE("verify_bounds catches a tampered profile") {
    // Valid tiling, wrong counts: 3 + 1 + 0 = 4 hits but unbalanced.
    const BiasProfile bad(4, Modulus(3), {{0, 1, 3}, {1, 2, 1}, {2, 3, 0}});
    CHECK_FALSE(verify_bounds(bad));
    const BiasProfile bad_large(std::uint64_t{1} << 20, Modulus(100000),
                                {{0, 50000, 11}, {50000, 100000, 10}});
    CHECK_FALSE(verify_bounds(bad_large));
    CHECK_THROWS_AS(BiasProfile(4, Modulus(3), {{0, 2, 2}}), PreconditionViolation);
}
