#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "maskcheck/wire.hpp"

namespace maskcheck {

// Exhaustive census of every Boolean wire function at small q. Wire index i
// encodes w(s0, s1) as bit (s0 * q + s1) of i, so there are 2^(q^2) wires.

inline constexpr std::uint64_t kMaxCensusModulus = 5;

struct CensusReport {
    std::uint64_t q = 0;
    std::uint64_t total_wires = 0;
    std::uint64_t value_independent = 0;
    std::uint64_t constant_marginal = 0;  // includes the value-independent wires
    std::uint64_t conservative = 0;       // constant_marginal - value_independent
    std::uint64_t non_constant = 0;
    std::uint64_t soundness_violations = 0;
    std::chrono::duration<double> wall_time{};

    bool same_counts(const CensusReport& o) const noexcept {
        return q == o.q && total_wires == o.total_wires && value_independent == o.value_independent &&
               constant_marginal == o.constant_marginal && conservative == o.conservative &&
               non_constant == o.non_constant && soundness_violations == o.soundness_violations;
    }
};

/// Bit masks over a packed q^2-bit wire, built once per modulus.
/// column[s1] selects the cells (*, s1); diagonal[x] selects the cells
/// (x - s1, s1) visited by the reparametrization for secret x.
class PackedLayout {
public:
    explicit PackedLayout(const Modulus& q);

    const Modulus& modulus() const noexcept { return q_; }
    std::uint64_t wire_count() const noexcept { return std::uint64_t{1} << (q_.value() * q_.value()); }

    bool value_independent(std::uint32_t wire) const noexcept;
    bool constant_marginal(std::uint32_t wire) const noexcept;
    Verdict classify(std::uint32_t wire) const noexcept;
    /// h(x, true) for the packed wire.
    std::uint64_t true_count(std::uint32_t wire, std::uint64_t x) const noexcept;

private:
    Modulus q_;
    std::vector<std::uint32_t> column_;
    std::vector<std::uint32_t> diagonal_;
};

/// Classifies all 2^(q^2) Boolean wires, q <= 5, split across `workers`
/// contiguous index ranges. Counts do not depend on the worker count.
CensusReport run_census(const Modulus& q, unsigned workers = 1);

/// sum_{k=0}^{q} C(q, k)^q: the number of Boolean wires whose q
/// reparametrization diagonals all hold the same number of ones.
std::uint64_t constant_marginal_count_formula(std::uint64_t q);

struct SpotCheck {
    std::uint64_t q = 0;
    std::uint64_t wire_index = 0;
    WireFunction wire;
    Verdict verdict{};
    MarginalHistogram histogram;
    // f with w(s0, s1) = f(s1), present iff the wire is value-independent.
    std::optional<std::vector<Symbol>> mask_only_dependence;
};

WireFunction decode_wire(const Modulus& q, std::uint64_t wire_index);
std::uint64_t encode_wire(const WireFunction& w);

SpotCheck spot_check(const Modulus& q, std::uint64_t wire_index);

}  // namespace maskcheck
