#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "maskcheck/errors.hpp"

namespace maskcheck {

/// A runtime modulus q >= 1. Residues live in [0, q) and q itself is capped
/// at 2^32 so that every intermediate (x + q - s1, t * b) fits in 64 bits.
class Modulus {
public:
    static constexpr std::uint64_t kMax = std::uint64_t{1} << 32;

    explicit Modulus(std::uint64_t q);

    std::uint64_t value() const noexcept { return q_; }
    /// True iff q >= 2, i.e. 1 != 0 in Z/qZ.
    bool nontrivial() const noexcept { return q_ >= 2; }

    std::uint64_t reduce(std::uint64_t v) const noexcept { return v % q_; }
    std::uint64_t reduce_signed(std::int64_t v) const noexcept;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::uint64_t q_;
};

/// A canonically reduced residue 0 <= value < q.
class ZqElement {
public:
    /// Rejects value >= q.
    ZqElement(Modulus q, std::uint64_t value);

    /// Reduces any integer into [0, q).
    static ZqElement reduce(Modulus q, std::uint64_t v) { return ZqElement(q, q.reduce(v), Canonical{}); }
    static ZqElement reduce_signed(Modulus q, std::int64_t v) {
        return ZqElement(q, q.reduce_signed(v), Canonical{});
    }

    std::uint64_t value() const noexcept { return value_; }
    const Modulus& modulus() const noexcept { return q_; }

    ZqElement operator+(const ZqElement& rhs) const;
    ZqElement operator-(const ZqElement& rhs) const;
    ZqElement operator*(const ZqElement& rhs) const;
    ZqElement operator-() const;

    friend bool operator==(const ZqElement&, const ZqElement&) = default;

private:
    struct Canonical {};
    ZqElement(Modulus q, std::uint64_t value, Canonical) noexcept : q_(q), value_(value) {}
    void require_same(const ZqElement& rhs, const char* op) const;

    Modulus q_;
    std::uint64_t value_;
};

/// A k-bit word, 0 <= k <= 64, with bits < 2^k.
class BitWord {
public:
    BitWord(unsigned width, std::uint64_t bits);

    unsigned width() const noexcept { return width_; }
    std::uint64_t bits() const noexcept { return bits_; }
    static std::uint64_t mask(unsigned width) noexcept {
        return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    }

    friend bool operator==(const BitWord&, const BitWord&) = default;

private:
    unsigned width_;
    std::uint64_t bits_;
};

// Arithmetic reparametrization: the share s0 = x - s1 with s0 + s1 == x.
ZqElement arith_reparam(const Modulus& q, const ZqElement& x, const ZqElement& s1);

// (x - s1) + s1 == x, evaluated rather than assumed.
bool arith_reparam_round_trip(const Modulus& q, const ZqElement& x, const ZqElement& s1);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Enumerates the image of x -> x - s1 over all of Z_q and counts distinct
/// values. Throws CapExceeded when q > cap.
bool arith_reparam_is_bijection(const Modulus& q, const ZqElement& s1,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// Boolean reparametrization x ^ s1. Self-inverse.
BitWord bool_reparam(const BitWord& x, const BitWord& s1);

}  // namespace maskcheck
