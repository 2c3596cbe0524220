#include "doctest.h"
#include "maskcheck/streams.hpp"
#include "maskcheck/wire_io.hpp"

using namespace maskcheck;

TEST_CASE("parse a wire file") {
    const WireFunction w = parse_wire_json(R"({"q": 2, "alphabet": 2, "order": "s0_major", "table": [1, 1, 0, 0]})");
    CHECK(w.modulus().value() == 2);
    CHECK(w(0, 1) == 1);
    CHECK(w(1, 0) == 0);
    CHECK(classify(w) == Verdict::ConstantMarginalOnly);

    // alphabet and order default
    CHECK(parse_wire_json(R"({"q": 1, "table": [1]})").alphabet() == 2);
}

TEST_CASE("malformed wire files") {
    SUBCASE("truncated document reports a byte offset") {
        try {
            parse_wire_json(R"({"q": 2, "table": [1, 1, 0)");
            FAIL("expected a parse error");
        } catch (const WireFormatError& e) {
            REQUIRE(e.offset().has_value());
            CHECK(*e.offset() > 20);
        }
    }
    SUBCASE("short table") {
        CHECK_THROWS_WITH_AS(parse_wire_json(R"({"q": 2, "table": [1, 1, 0]})"),
                             "table has 3 entries, expected q^2 = 4", WireFormatError);
    }
    SUBCASE("symbol outside alphabet") {
        CHECK_THROWS_AS(parse_wire_json(R"({"q": 2, "alphabet": 2, "table": [1, 2, 0, 0]})"), WireFormatError);
        CHECK_THROWS_AS(parse_wire_json(R"({"q": 2, "table": [1, -1, 0, 0]})"), WireFormatError);
    }
    SUBCASE("structural problems") {
        CHECK_THROWS_AS(parse_wire_json("[1, 2]"), WireFormatError);
        CHECK_THROWS_AS(parse_wire_json(R"({"table": [0]})"), WireFormatError);
        CHECK_THROWS_AS(parse_wire_json(R"({"q": 0, "table": []})"), WireFormatError);
        CHECK_THROWS_AS(parse_wire_json(R"({"q": 1, "order": "s1_major", "table": [0]})"), WireFormatError);
        CHECK_THROWS_AS(parse_wire_json(R"({"q": 1, "table": "0"})"), WireFormatError);
        CHECK_THROWS_AS(parse_wire_json(R"({"q": 100000, "table": []})"), WireFormatError);
    }
    CHECK_THROWS_AS(load_wire_file("/nonexistent/wire.json"), WireFormatError);
}

TEST_CASE("serialized wires parse back to the same table") {
    auto rng = named_stream(1, "unit.wire_io");
    for (int i = 0; i < 50; ++i) {
        const std::uint64_t q = 1 + rng() % 9;
        const Symbol b = 1 + static_cast<Symbol>(rng() % 6);
        const WireFunction w = WireFunction::tabulate(Modulus(q), b, [&](auto, auto) { return rng() % b; });
        const WireFunction back = parse_wire_json(wire_to_json(w));
        REQUIRE(back.alphabet() == b);
        REQUIRE(std::equal(w.table().begin(), w.table().end(), back.table().begin(), back.table().end()));
    }
}
