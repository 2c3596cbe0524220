#include "doctest.h"
#include "maskcheck/bitvec.hpp"
#include "maskcheck/streams.hpp"

using namespace maskcheck;

TEST_CASE("no-overflow bound examples") {
    const auto lo = no_overflow_bounds(5, 0, 4);
    CHECK(lo.intermediate == 1);
    CHECK((lo.lower_ok && lo.upper_ok));
    const auto hi = no_overflow_bounds(5, 4, 0);
    CHECK(hi.intermediate == 9);
    CHECK((hi.lower_ok && hi.upper_ok));
    const auto dsa = no_overflow_bounds(8380417, 8380416, 0);
    CHECK(dsa.intermediate == 16760833);
    CHECK((dsa.lower_ok && dsa.upper_ok));
    CHECK_THROWS_AS(no_overflow_bounds(5, 5, 0), PreconditionViolation);
    CHECK_THROWS_AS(no_overflow_bounds(0, 0, 0), PreconditionViolation);
}

TEST_CASE("no-overflow bounds hold exhaustively and on samples") {
    for (std::uint64_t q : {1, 2, 3, 5, 3329}) {
        for (std::uint64_t x = 0; x < q; ++x)
            for (std::uint64_t s1 = 0; s1 < q; ++s1) {
                const auto b = no_overflow_bounds(q, x, s1);
                if (!b.lower_ok || !b.upper_ok) FAIL("intermediate range violated at q=" << q << " x=" << x << " s1=" << s1);
            }
    }
    auto rng = named_stream(17, "unit.bitvec.range");
    std::uniform_int_distribution<std::uint64_t> draw(0, 8380416);
    for (int i = 0; i < 100000; ++i) {
        const auto b = no_overflow_bounds(8380417, draw(rng), draw(rng));
        REQUIRE((b.lower_ok && b.upper_ok));
    }
}

TEST_CASE("width admissibility") {
    CHECK(width_admissible(WidthConfig(Modulus(3329), 24)));
    CHECK(width_admissible(WidthConfig(Modulus(8380417), 24)));
    CHECK_FALSE(width_admissible(WidthConfig(Modulus(8388608), 24)));
    CHECK(width_admissible(WidthConfig(Modulus(8388607), 24)));
    CHECK_FALSE(width_admissible(WidthConfig(Modulus(3329), 12)));
    CHECK(width_admissible(WidthConfig(Modulus(Modulus::kMax), 64)));
    CHECK_THROWS_AS(WidthConfig(Modulus(5), 0), PreconditionViolation);
}

TEST_CASE("urem reparametrization examples") {
    const WidthConfig kem(Modulus(3329), 24);
    const Word s0 = urem_reparam(kem, Word(24, 0), Word(24, 3328));
    CHECK(s0.value() == 1);
    CHECK(urem_recombine(kem, s0, Word(24, 3328)).value() == 0);

    const WidthConfig small(Modulus(5), 24);
    for (std::uint64_t x = 0; x < 5; ++x)
        for (std::uint64_t s1 = 0; s1 < 5; ++s1)
            CHECK(urem_reparam(small, Word(24, x), Word(24, s1)).value() ==
                  arith_reparam(Modulus(5), ZqElement(Modulus(5), x), ZqElement(Modulus(5), s1)).value());
}

TEST_CASE("urem reparametrization matches the ring") {
    for (std::uint64_t q = 1; q <= 64; ++q) {
        const WidthConfig cfg(Modulus(q), 24);
        for (std::uint64_t x = 0; x < q; ++x)
            for (std::uint64_t s1 = 0; s1 < q; ++s1) {
                const Word s0 = urem_reparam(cfg, Word(24, x), Word(24, s1));
                REQUIRE(s0.value() == (x + q - s1) % q);
                REQUIRE(urem_recombine(cfg, s0, Word(24, s1)).value() == x);
            }
    }
    auto rng = named_stream(23, "unit.bitvec.urem");
    for (std::uint64_t q : {3329, 8380417}) {
        const Modulus m(q);
        const WidthConfig cfg(m, 24);
        std::uniform_int_distribution<std::uint64_t> draw(0, q - 1);
        for (int i = 0; i < 100000; ++i) {
            const std::uint64_t x = draw(rng), s1 = draw(rng);
            const Word s0 = urem_reparam(cfg, Word(24, x), Word(24, s1));
            REQUIRE(s0.value() == arith_reparam(m, ZqElement(m, x), ZqElement(m, s1)).value());
            REQUIRE(urem_recombine(cfg, s0, Word(24, s1)).value() == x);
        }
    }
}

TEST_CASE("checked words refuse to wrap") {
    CHECK_THROWS_AS(Word(24, std::uint64_t{1} << 24), WordOverflow);
    CHECK_THROWS_AS(Word(24, (1u << 24) - 1).add(Word(24, 1)), WordOverflow);
    CHECK_THROWS_AS(Word(24, 3).sub(Word(24, 4)), WordOverflow);
    CHECK_THROWS_AS(Word(24, 3).add(Word(12, 4)), WidthMismatch);
    CHECK(Word(64, ~std::uint64_t{0}).value() == ~std::uint64_t{0});
    CHECK_THROWS_AS(Word(64, ~std::uint64_t{0}).add(Word(64, 1)), WordOverflow);

    // With 2q = 2^w the sum x + q can leave the word; the config refuses first.
    const WidthConfig tight(Modulus(8388608), 24);
    CHECK_THROWS_AS(urem_reparam(tight, Word(24, 0), Word(24, 0)), PreconditionViolation);
    const WidthConfig ok(Modulus(3329), 24);
    CHECK_THROWS_AS(urem_reparam(ok, Word(24, 3329), Word(24, 0)), PreconditionViolation);
    CHECK_THROWS_AS(urem_reparam(ok, Word(16, 1), Word(16, 0)), WidthMismatch);
}
