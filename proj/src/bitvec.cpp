#include "maskcheck/bitvec.hpp"

#include <string>

namespace maskcheck {

namespace {

std::uint64_t limit_of(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

WidthConfig::WidthConfig(Modulus modulus, unsigned bits) : q(modulus), width(bits) {
    if (bits == 0 || bits > 64) throw PreconditionViolation("word width must be in [1, 64]");
}

bool WidthConfig::admissible() const noexcept {
    // q <= 2^32, so 2q fits easily; compare against 2^w without shifting past 63.
    const std::uint64_t doubled = 2 * q.value();
    return width >= 64 || doubled < (std::uint64_t{1} << width);
}

bool width_admissible(const WidthConfig& cfg) noexcept { return cfg.admissible(); }

OverflowBounds no_overflow_bounds(std::uint64_t q, std::uint64_t x, std::uint64_t s1) {
    if (q == 0) throw PreconditionViolation("q must be positive");
    if (x >= q || s1 >= q) throw PreconditionViolation("x and s1 must be below q");
    if (q > Modulus::kMax) throw PreconditionViolation("q exceeds 2^32");
    const std::int64_t t = static_cast<std::int64_t>(x) + static_cast<std::int64_t>(q) -
                           static_cast<std::int64_t>(s1);
    const std::int64_t twice = 2 * static_cast<std::int64_t>(q);
    return {static_cast<std::uint64_t>(t < 0 ? 0 : t), t >= 1, t < twice};
}

Word::Word(unsigned width, std::uint64_t value) : width_(width), value_(value) {
    if (width == 0 || width > 64) throw PreconditionViolation("word width must be in [1, 64]");
    if (value > limit_of(width)) {
        throw WordOverflow(std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
    }
}

Word Word::add(const Word& rhs) const {
    if (rhs.width_ != width_) throw WidthMismatch("word widths differ");
    const std::uint64_t limit = limit_of(width_);
    if (rhs.value_ > limit - value_) {
        throw WordOverflow("w-bit addition " + std::to_string(value_) + " + " + std::to_string(rhs.value_) +
                           " overflows " + std::to_string(width_) + " bits");
    }
    return Word(width_, value_ + rhs.value_);
}

Word Word::sub(const Word& rhs) const {
    if (rhs.width_ != width_) throw WidthMismatch("word widths differ");
    if (rhs.value_ > value_) {
        throw WordOverflow("w-bit subtraction " + std::to_string(value_) + " - " + std::to_string(rhs.value_) +
                           " underflows");
    }
    return Word(width_, value_ - rhs.value_);
}

Word Word::urem(const Word& rhs) const {
    if (rhs.width_ != width_) throw WidthMismatch("word widths differ");
    if (rhs.value_ == 0) throw PreconditionViolation("URem by zero");
    return Word(width_, value_ % rhs.value_);
}

namespace {

Word modulus_word(const WidthConfig& cfg) {
    if (!cfg.admissible()) {
        throw PreconditionViolation("width " + std::to_string(cfg.width) + " is inadmissible for q = " +
                                    std::to_string(cfg.q.value()) + " (needs 2q < 2^w)");
    }
    return Word(cfg.width, cfg.q.value());
}

void require_below_q(const WidthConfig& cfg, const Word& v, const char* name) {
    if (v.width() != cfg.width) throw WidthMismatch(std::string(name) + " has the wrong word width");
    if (v.value() >= cfg.q.value()) {
        throw PreconditionViolation(std::string(name) + " = " + std::to_string(v.value()) + " is not below q");
    }
}

}  // namespace

Word urem_reparam(const WidthConfig& cfg, const Word& x, const Word& s1) {
    const Word q = modulus_word(cfg);
    require_below_q(cfg, x, "x");
    require_below_q(cfg, s1, "s1");
    return x.add(q).sub(s1).urem(q);
}

Word urem_recombine(const WidthConfig& cfg, const Word& s0, const Word& s1) {
    const Word q = modulus_word(cfg);
    require_below_q(cfg, s0, "s0");
    require_below_q(cfg, s1, "s1");
    return s0.add(s1).urem(q);
}

}  // namespace maskcheck
