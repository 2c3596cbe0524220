#pragma once

// JSON reports behind the CLI. Every document carries "schema": "maskcheck/1"
// and uses insertion-ordered keys so output is byte-stable.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "maskcheck/bitvec.hpp"
#include "maskcheck/butterfly.hpp"
#include "maskcheck/census.hpp"
#include "maskcheck/rng_bias.hpp"
#include "maskcheck/wire.hpp"

namespace maskcheck::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "maskcheck/1";
inline constexpr std::uint64_t kFullCountsLimit = std::uint64_t{1} << 16;

Json header(std::string_view command);

Json classify(const WireFunction& w);

/// Counts only unless include_timing is set; timing breaks byte-stability.
Json census(const CensusReport& r, bool include_timing);
std::string census_csv(const CensusReport& r);
Json spot_check(const SpotCheck& s);

Json bias(const BiasProfile& profile);
std::string bias_csv(const BiasProfile& profile);

Json bounds(const WidthConfig& cfg);

struct UremCheckResult {
    std::uint64_t q = 0;
    unsigned width = 0;
    std::string mode;  // "exhaustive" or "sampled"
    std::uint64_t seed = 0;
    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t round_trip_failures = 0;
    std::uint64_t bound_violations = 0;
};

/// Compares urem_reparam against arith_reparam: every pair when q <= 64,
/// otherwise `samples` pairs from the "urem-check" stream of `seed`.
UremCheckResult urem_check(const WidthConfig& cfg, std::uint64_t seed, std::uint64_t samples);
Json urem(const UremCheckResult& r);

struct WitnessResult {
    std::uint64_t q = 0;
    Verdict verdict{};
    MutualInformation mi;
    std::vector<std::uint64_t> row;  // h(x, v) for any x: {q - 1, 1}
    bool counterexample_holds = false;  // w(0 - 0, 0) != w(1 - 0, 0)
    std::uint64_t seed = 0;
    std::uint64_t translation_pairs = 0;
    std::uint64_t translation_failures = 0;
};

/// Classifies the zero-indicator witness and runs translation_bijection_check
/// on `pairs` (x, x') drawn from the "witness" stream.
WitnessResult witness_check(const Modulus& q, std::uint64_t seed, std::uint64_t pairs);
Json witness(const WitnessResult& r);

Json butterfly(const SweepReport& r);

}  // namespace maskcheck::report
