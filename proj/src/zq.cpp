#include "maskcheck/zq.hpp"

#include <vector>

namespace maskcheck {

Modulus::Modulus(std::uint64_t q) : q_(q) {
    if (q == 0) throw PreconditionViolation("modulus must be positive");
    if (q > kMax) throw PreconditionViolation("modulus " + std::to_string(q) + " exceeds 2^32");
}

std::uint64_t Modulus::reduce_signed(std::int64_t v) const noexcept {
    const auto q = static_cast<std::int64_t>(q_);
    std::int64_t r = v % q;
    if (r < 0) r += q;
    return static_cast<std::uint64_t>(r);
}

ZqElement::ZqElement(Modulus q, std::uint64_t value) : q_(q), value_(value) {
    if (value >= q.value()) {
        throw PreconditionViolation("residue " + std::to_string(value) + " not below q = " +
                                    std::to_string(q.value()));
    }
}

void ZqElement::require_same(const ZqElement& rhs, const char* op) const {
    if (q_ != rhs.q_) {
        throw ModulusMismatch(std::string("operands of '") + op + "' have moduli " +
                              std::to_string(q_.value()) + " and " + std::to_string(rhs.q_.value()));
    }
}

ZqElement ZqElement::operator+(const ZqElement& rhs) const {
    require_same(rhs, "+");
    return ZqElement(q_, q_.reduce(value_ + rhs.value_), Canonical{});
}

// value_ + q - rhs stays in [1, 2q) and never wraps.
ZqElement ZqElement::operator-(const ZqElement& rhs) const {
    require_same(rhs, "-");
    return ZqElement(q_, q_.reduce(value_ + q_.value() - rhs.value_), Canonical{});
}

ZqElement ZqElement::operator*(const ZqElement& rhs) const {
    require_same(rhs, "*");
    const unsigned __int128 wide = static_cast<unsigned __int128>(value_) * rhs.value_;
    return ZqElement(q_, static_cast<std::uint64_t>(wide % q_.value()), Canonical{});
}

ZqElement ZqElement::operator-() const {
    return ZqElement(q_, q_.reduce(q_.value() - value_), Canonical{});
}

BitWord::BitWord(unsigned width, std::uint64_t bits) : width_(width), bits_(bits) {
    if (width > 64) throw PreconditionViolation("bit width above 64");
    if ((bits & ~mask(width)) != 0) {
        throw PreconditionViolation("bits do not fit in " + std::to_string(width) + " bits");
    }
}

namespace {

void require_modulus(const Modulus& q, const ZqElement& e) {
    if (e.modulus() != q) {
        throw ModulusMismatch("operand modulus " + std::to_string(e.modulus().value()) +
                              " differs from q = " + std::to_string(q.value()));
    }
}

}  // namespace

ZqElement arith_reparam(const Modulus& q, const ZqElement& x, const ZqElement& s1) {
    require_modulus(q, x);
    require_modulus(q, s1);
    return x - s1;
}

bool arith_reparam_round_trip(const Modulus& q, const ZqElement& x, const ZqElement& s1) {
    return arith_reparam(q, x, s1) + s1 == x;
}

bool arith_reparam_is_bijection(const Modulus& q, const ZqElement& s1, std::uint64_t cap) {
    require_modulus(q, s1);
    if (q.value() > cap) {
        throw CapExceeded("q = " + std::to_string(q.value()) + " exceeds enumeration cap " +
                          std::to_string(cap));
    }
    std::vector<bool> seen(q.value(), false);
    std::uint64_t distinct = 0;
    for (std::uint64_t x = 0; x < q.value(); ++x) {
        const auto s0 = arith_reparam(q, ZqElement(q, x), s1).value();
        if (!seen[s0]) {
            seen[s0] = true;
            ++distinct;
        }
    }
    return distinct == q.value();
}

BitWord bool_reparam(const BitWord& x, const BitWord& s1) {
    if (x.width() != s1.width()) {
        throw WidthMismatch("xor of " + std::to_string(x.width()) + "-bit and " +
                            std::to_string(s1.width()) + "-bit words");
    }
    return BitWord(x.width(), x.bits() ^ s1.bits());
}

}  // namespace maskcheck
