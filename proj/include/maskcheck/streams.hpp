#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace maskcheck {

/// A PRNG stream determined by (seed, name). Each randomized check draws
/// from its own named stream, so adding a check never shifts another's samples.
std::mt19937_64 named_stream(std::uint64_t seed, std::string_view name);

}  // namespace maskcheck
