#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maskcheck/zq.hpp"

namespace maskcheck {

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Rational reduced(std::uint64_t num, std::uint64_t den);
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Residues [first, last) all occur `count` times.
struct CountRun {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::uint64_t count = 0;
};

/// Residue counts of n mod q over n in [0, N). Counts take at most two
/// adjacent values, so they are held as runs; counts() expands them.
class BiasProfile {
public:
    BiasProfile(std::uint64_t sample_space, Modulus q, std::vector<CountRun> runs);

    std::uint64_t sample_space() const noexcept { return n_; }
    const Modulus& modulus() const noexcept { return q_; }
    const std::vector<CountRun>& runs() const noexcept { return runs_; }

    std::uint64_t count(std::uint64_t residue) const;
    /// Full array of q counts. Throws CapExceeded above `cap` residues.
    std::vector<std::uint64_t> counts(std::uint64_t cap = std::uint64_t{1} << 24) const;

    std::uint64_t min_count() const noexcept { return min_; }
    std::uint64_t max_count() const noexcept { return max_; }
    /// max/min, or nullopt (degenerate) when some residue never occurs.
    std::optional<Rational> ratio() const noexcept { return ratio_; }
    bool divides_exactly() const noexcept { return n_ % q_.value() == 0; }

private:
    std::uint64_t n_;
    Modulus q_;
    std::vector<CountRun> runs_;
    std::uint64_t min_ = 0;
    std::uint64_t max_ = 0;
    std::optional<Rational> ratio_;
};

/// |{ n < N : n mod q = r }| = floor((N - 1 - r) / q) + 1 for r < min(N, q), else 0.
std::uint64_t residue_count(std::uint64_t sample_space, const Modulus& q, std::uint64_t residue);

BiasProfile bias_profile(std::uint64_t sample_space, const Modulus& q);

/// Re-derives every count and confirms floor(N/q) <= count <= ceil(N/q),
/// sum = N, and count = N/q when q | N.
bool verify_bounds(const BiasProfile& profile);

}  // namespace maskcheck
