#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "maskcheck/zq.hpp"

namespace maskcheck {

using Symbol = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 26;

/// Dense wire function w: Z_q x Z_q -> [0, B). Entry (s0 * q + s1) holds
/// w(s0, s1); this s0-major order is also the on-disk order.
class WireFunction {
public:
    WireFunction(Modulus q, Symbol alphabet, std::vector<Symbol> table,
                 std::uint64_t max_cells = kDefaultMaxCells);

    /// Tabulates fn(s0, s1) for all share pairs.
    template <class Fn>
    static WireFunction tabulate(Modulus q, Symbol alphabet, Fn&& fn,
                                 std::uint64_t max_cells = kDefaultMaxCells) {
        check_size(q, max_cells);
        const std::uint64_t n = q.value();
        std::vector<Symbol> table(n * n);
        for (std::uint64_t s0 = 0; s0 < n; ++s0)
            for (std::uint64_t s1 = 0; s1 < n; ++s1)
                table[s0 * n + s1] = static_cast<Symbol>(fn(s0, s1));
        return WireFunction(q, alphabet, std::move(table), max_cells);
    }

    const Modulus& modulus() const noexcept { return q_; }
    Symbol alphabet() const noexcept { return alphabet_; }
    std::span<const Symbol> table() const noexcept { return table_; }

    Symbol operator()(std::uint64_t s0, std::uint64_t s1) const noexcept {
        return table_[s0 * q_.value() + s1];
    }
    Symbol operator()(const ZqElement& s0, const ZqElement& s1) const noexcept {
        return (*this)(s0.value(), s1.value());
    }

    static void check_size(const Modulus& q, std::uint64_t max_cells);

private:
    Modulus q_;
    Symbol alphabet_;
    std::vector<Symbol> table_;
};

/// counts[x][v] = h(x, v) = #{ s1 : w(x - s1, s1) = v }.
class MarginalHistogram {
public:
    MarginalHistogram(Modulus q, Symbol alphabet, std::vector<std::uint64_t> counts);

    const Modulus& modulus() const noexcept { return q_; }
    Symbol alphabet() const noexcept { return alphabet_; }
    std::span<const std::uint64_t> row(std::uint64_t x) const noexcept {
        return {counts_.data() + x * alphabet_, alphabet_};
    }
    std::uint64_t at(std::uint64_t x, Symbol v) const noexcept { return counts_[x * alphabet_ + v]; }
    bool rows_identical() const noexcept;

private:
    Modulus q_;
    Symbol alphabet_;
    std::vector<std::uint64_t> counts_;
};

// Value-independent wires map to QANARY's SECURE. Constant-marginal-only wires
// are the conservative false positives (INSECURE_CONSERVATIVE); the last label
// covers wires whose distribution actually moves with the secret.
enum class Verdict { ValueIndependent, ConstantMarginalOnly, NonConstantMarginal };

std::string_view to_string(Verdict v) noexcept;

bool is_value_independent(const WireFunction& w);

MarginalHistogram marginal_histogram(const WireFunction& w);
std::vector<std::uint64_t> marginal_histogram(const WireFunction& w, const ZqElement& x);

bool has_constant_marginal(const WireFunction& w);

Verdict classify(const WireFunction& w);

struct MutualInformation {
    double bits = 0.0;     // I(X; W) with X, S1 uniform on Z_q
    bool is_zero = false;  // decided exactly from the histogram
};

MutualInformation mutual_information(const WireFunction& w);
MutualInformation mutual_information(const MarginalHistogram& h);

/// The indicator wire [s0 == 0]. Requires q >= 2.
WireFunction t6_witness(const Modulus& q);

/// For every output v, checks that s1 -> s1 + (x' - x) maps
/// { s1 : w(x - s1, s1) = v } injectively onto { s1 : w(x' - s1, s1) = v }.
/// Always holds for the zero-indicator wire; other wires may return false.
bool translation_bijection_check(const WireFunction& w, const ZqElement& x, const ZqElement& x_prime,
                                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace maskcheck
