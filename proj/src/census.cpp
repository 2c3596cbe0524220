#include "maskcheck/census.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace maskcheck {

namespace {

constexpr std::uint64_t kMaxEncodableModulus = 8;  // q^2 <= 64 bits

void require_census_modulus(const Modulus& q) {
    if (q.value() > kMaxCensusModulus) {
        throw CapExceeded("exhaustive census needs q <= " + std::to_string(kMaxCensusModulus) + " (got q = " +
                          std::to_string(q.value()) + ", 2^" + std::to_string(q.value() * q.value()) +
                          " wires)");
    }
}

struct Tally {
    std::uint64_t value_independent = 0;
    std::uint64_t constant_marginal = 0;
    std::uint64_t violations = 0;
};

Tally tally_range(const PackedLayout& layout, std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) {
        const auto wire = static_cast<std::uint32_t>(i);
        const bool vi = layout.value_independent(wire);
        const bool cm = layout.constant_marginal(wire);
        t.value_independent += vi;
        t.constant_marginal += cm;
        t.violations += vi && !cm;
    }
    return t;
}

}  // namespace

PackedLayout::PackedLayout(const Modulus& q) : q_(q) {
    require_census_modulus(q);
    const std::uint64_t n = q.value();
    column_.assign(n, 0);
    diagonal_.assign(n, 0);
    // Index table (x, s1) -> s0 * q + s1, built through the reparametrization
    // itself so the hot loop needs no modular arithmetic.
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t s1 = 0; s1 < n; ++s1) {
            const auto s0 = arith_reparam(q, ZqElement(q, x), ZqElement(q, s1)).value();
            diagonal_[x] |= std::uint32_t{1} << (s0 * n + s1);
            column_[s1] |= std::uint32_t{1} << (x * n + s1);
        }
    }
}

bool PackedLayout::value_independent(std::uint32_t wire) const noexcept {
    for (const std::uint32_t col : column_) {
        const std::uint32_t bits = wire & col;
        if (bits != 0 && bits != col) return false;
    }
    return true;
}

bool PackedLayout::constant_marginal(std::uint32_t wire) const noexcept {
    const int first = std::popcount(wire & diagonal_[0]);
    for (std::size_t x = 1; x < diagonal_.size(); ++x) {
        if (std::popcount(wire & diagonal_[x]) != first) return false;
    }
    return true;
}

Verdict PackedLayout::classify(std::uint32_t wire) const noexcept {
    if (value_independent(wire)) return Verdict::ValueIndependent;
    return constant_marginal(wire) ? Verdict::ConstantMarginalOnly : Verdict::NonConstantMarginal;
}

std::uint64_t PackedLayout::true_count(std::uint32_t wire, std::uint64_t x) const noexcept {
    return static_cast<std::uint64_t>(std::popcount(wire & diagonal_[x]));
}

CensusReport run_census(const Modulus& q, unsigned workers) {
    const auto start = std::chrono::steady_clock::now();
    const PackedLayout layout(q);
    const std::uint64_t total = layout.wire_count();
    workers = std::clamp<unsigned>(workers, 1, 1024);
    const std::uint64_t chunks = std::min<std::uint64_t>(workers, total);

    std::vector<Tally> partial(chunks);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = total * c / chunks;
        const std::uint64_t end = total * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] { partial[c] = tally_range(layout, begin, end); });
    }
    for (auto& th : pool) th.join();

    CensusReport r;
    r.q = q.value();
    r.total_wires = total;
    for (const Tally& t : partial) {
        r.value_independent += t.value_independent;
        r.constant_marginal += t.constant_marginal;
        r.soundness_violations += t.violations;
    }
    r.conservative = r.constant_marginal - std::min(r.constant_marginal, r.value_independent);
    r.non_constant = total - r.constant_marginal;
    r.wall_time = std::chrono::steady_clock::now() - start;
    return r;
}

std::uint64_t constant_marginal_count_formula(std::uint64_t q) {
    if (q == 0 || q > kMaxCensusModulus) {
        throw PreconditionViolation("formula is provided for 1 <= q <= " + std::to_string(kMaxCensusModulus));
    }
    std::uint64_t sum = 0;
    std::uint64_t binom = 1;  // C(q, k)
    for (std::uint64_t k = 0; k <= q; ++k) {
        std::uint64_t power = 1;
        for (std::uint64_t i = 0; i < q; ++i) power *= binom;
        sum += power;
        binom = binom * (q - k) / (k + 1);
    }
    return sum;
}

WireFunction decode_wire(const Modulus& q, std::uint64_t wire_index) {
    const std::uint64_t n = q.value();
    if (n > kMaxEncodableModulus) throw CapExceeded("packed wires need q <= 8");
    const std::uint64_t cells = n * n;
    if (cells < 64 && wire_index >> cells != 0) {
        throw PreconditionViolation("wire index " + std::to_string(wire_index) + " out of range for q = " +
                                    std::to_string(n) + " (2^" + std::to_string(cells) + " wires)");
    }
    return WireFunction::tabulate(q, 2, [&](std::uint64_t s0, std::uint64_t s1) {
        return (wire_index >> (s0 * n + s1)) & 1;
    });
}

std::uint64_t encode_wire(const WireFunction& w) {
    if (w.modulus().value() > kMaxEncodableModulus) throw CapExceeded("packed wires need q <= 8");
    std::uint64_t index = 0;
    const auto table = w.table();
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] > 1) throw PreconditionViolation("only Boolean wires have a packed index");
        index |= std::uint64_t{table[i]} << i;
    }
    return index;
}

SpotCheck spot_check(const Modulus& q, std::uint64_t wire_index) {
    WireFunction wire = decode_wire(q, wire_index);
    const Verdict verdict = classify(wire);
    MarginalHistogram histogram = marginal_histogram(wire);
    std::optional<std::vector<Symbol>> dependence;
    if (verdict == Verdict::ValueIndependent) {
        std::vector<Symbol> f(q.value());
        for (std::uint64_t s1 = 0; s1 < q.value(); ++s1) f[s1] = wire(0, s1);
        dependence = std::move(f);
    }
    return SpotCheck{q.value(), wire_index, std::move(wire), verdict, std::move(histogram), std::move(dependence)};
}

}  // namespace maskcheck
