#pragma once

#include <cstdint>

#include "maskcheck/zq.hpp"

namespace maskcheck {

/// A modulus paired with a hardware word width. Admissible iff 2q < 2^w,
/// which keeps the intermediate x + q - s1 representable.
struct WidthConfig {
    Modulus q;
    unsigned width;

    WidthConfig(Modulus modulus, unsigned bits);
    bool admissible() const noexcept;
};

bool width_admissible(const WidthConfig& cfg) noexcept;

struct OverflowBounds {
    std::uint64_t intermediate = 0;  // x + q - s1
    bool lower_ok = false;           // 1 <= x + q - s1
    bool upper_ok = false;           // x + q - s1 < 2q
};

/// Evaluates x + q - s1 over the naturals for x, s1 < q.
OverflowBounds no_overflow_bounds(std::uint64_t q, std::uint64_t x, std::uint64_t s1);

/// Unsigned w-bit word with checked arithmetic: any result >= 2^w or below
/// zero throws WordOverflow instead of wrapping.
class Word {
public:
    Word(unsigned width, std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    unsigned width() const noexcept { return width_; }

    Word add(const Word& rhs) const;
    Word sub(const Word& rhs) const;
    Word urem(const Word& rhs) const;

private:
    unsigned width_;
    std::uint64_t value_;
};

/// s0 = URem(x + q - s1, q) on w-bit words.
Word urem_reparam(const WidthConfig& cfg, const Word& x, const Word& s1);

/// URem(s0 + s1, q), the recombination that must give back x.
Word urem_recombine(const WidthConfig& cfg, const Word& s0, const Word& s1);

}  // namespace maskcheck
