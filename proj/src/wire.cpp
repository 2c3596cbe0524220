#include "maskcheck/wire.hpp"

#include <algorithm>
#include <cmath>

namespace maskcheck {

void WireFunction::check_size(const Modulus& q, std::uint64_t max_cells) {
    const std::uint64_t n = q.value();
    if (n >= (std::uint64_t{1} << 32) || n * n > max_cells) {
        throw CapExceeded("wire table for q = " + std::to_string(n) + " exceeds cap of " +
                          std::to_string(max_cells) + " cells");
    }
}

WireFunction::WireFunction(Modulus q, Symbol alphabet, std::vector<Symbol> table,
                           std::uint64_t max_cells)
    : q_(q), alphabet_(alphabet), table_(std::move(table)) {
    check_size(q_, max_cells);
    if (alphabet_ == 0) throw PreconditionViolation("alphabet must have at least one symbol");
    const std::uint64_t expected = q_.value() * q_.value();
    if (table_.size() != expected) {
        throw PreconditionViolation("wire table has " + std::to_string(table_.size()) +
                                    " entries, expected q^2 = " + std::to_string(expected));
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i] >= alphabet_) {
            throw PreconditionViolation("table entry " + std::to_string(i) + " = " +
                                        std::to_string(table_[i]) + " outside alphabet of size " +
                                        std::to_string(alphabet_));
        }
    }
}

MarginalHistogram::MarginalHistogram(Modulus q, Symbol alphabet, std::vector<std::uint64_t> counts)
    : q_(q), alphabet_(alphabet), counts_(std::move(counts)) {
    if (counts_.size() != q_.value() * alphabet_) {
        throw PreconditionViolation("histogram must hold q * alphabet counts");
    }
    for (std::uint64_t x = 0; x < q_.value(); ++x) {
        const auto r = row(x);
        std::uint64_t sum = 0;
        for (auto c : r) sum += c;
        if (sum != q_.value()) {
            throw InvariantViolation("histogram row " + std::to_string(x) + " sums to " +
                                     std::to_string(sum) + ", not q");
        }
    }
}

bool MarginalHistogram::rows_identical() const noexcept {
    const auto first = row(0);
    for (std::uint64_t x = 1; x < q_.value(); ++x) {
        const auto r = row(x);
        if (!std::equal(first.begin(), first.end(), r.begin())) return false;
    }
    return true;
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::ValueIndependent: return "VALUE_INDEPENDENT";
        case Verdict::ConstantMarginalOnly: return "CONSTANT_MARGINAL_ONLY";
        case Verdict::NonConstantMarginal: return "NON_CONSTANT_MARGINAL";
    }
    return "UNKNOWN";
}

bool is_value_independent(const WireFunction& w) {
    const Modulus& q = w.modulus();
    for (std::uint64_t m = 0; m < q.value(); ++m) {
        const ZqElement s1(q, m);
        const Symbol first = w(arith_reparam(q, ZqElement(q, 0), s1), s1);
        for (std::uint64_t x = 1; x < q.value(); ++x) {
            if (w(arith_reparam(q, ZqElement(q, x), s1), s1) != first) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> marginal_histogram(const WireFunction& w, const ZqElement& x) {
    const Modulus& q = w.modulus();
    if (x.modulus() != q) throw ModulusMismatch("secret and wire use different moduli");
    std::vector<std::uint64_t> counts(w.alphabet(), 0);
    for (std::uint64_t m = 0; m < q.value(); ++m) {
        const ZqElement s1(q, m);
        ++counts[w(arith_reparam(q, x, s1), s1)];
    }
    return counts;
}

MarginalHistogram marginal_histogram(const WireFunction& w) {
    const Modulus& q = w.modulus();
    const std::uint64_t n = q.value();
    const Symbol b = w.alphabet();
    std::vector<std::uint64_t> counts(n * b, 0);
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::uint64_t s1 = 0; s1 < n; ++s1) {
            const std::uint64_t s0 = x >= s1 ? x - s1 : x + n - s1;
            ++counts[x * b + w(s0, s1)];
        }
    }
    return MarginalHistogram(q, b, std::move(counts));
}

bool has_constant_marginal(const WireFunction& w) { return marginal_histogram(w).rows_identical(); }

Verdict classify(const WireFunction& w) {
    const bool vi = is_value_independent(w);
    const bool constant = has_constant_marginal(w);
    if (vi && !constant) {
        throw InvariantViolation("value-independent wire with non-constant marginal histogram");
    }
    if (vi) return Verdict::ValueIndependent;
    return constant ? Verdict::ConstantMarginalOnly : Verdict::NonConstantMarginal;
}

MutualInformation mutual_information(const MarginalHistogram& h) {
    const std::uint64_t n = h.modulus().value();
    const Symbol b = h.alphabet();
    // Column totals: number of (x, s1) pairs producing v.
    std::vector<std::uint64_t> per_symbol(b, 0);
    for (std::uint64_t x = 0; x < n; ++x)
        for (Symbol v = 0; v < b; ++v) per_symbol[v] += h.at(x, v);

    // I = sum p(x,v) log2(p(x,v) / (p(x) p(v))) with p(x,v) = h/q^2,
    // p(x) = 1/q and p(v) = per_symbol/q^2, so the ratio is h*q / per_symbol.
    // Equal conditionals give a ratio of exactly 1.0 and a zero term.
    const double total = static_cast<double>(n) * static_cast<double>(n);
    double bits = 0.0;
    for (std::uint64_t x = 0; x < n; ++x) {
        for (Symbol v = 0; v < b; ++v) {
            const std::uint64_t c = h.at(x, v);
            if (c == 0) continue;
            const double ratio = static_cast<double>(c * n) / static_cast<double>(per_symbol[v]);
            bits += (static_cast<double>(c) / total) * std::log2(ratio);
        }
    }
    const bool zero = h.rows_identical();
    return {std::max(bits, 0.0), zero};
}

MutualInformation mutual_information(const WireFunction& w) {
    return mutual_information(marginal_histogram(w));
}

WireFunction t6_witness(const Modulus& q) {
    if (!q.nontrivial()) {
        throw PreconditionViolation("the zero-indicator witness needs q >= 2 (1 == 0 in Z_1)");
    }
    return WireFunction::tabulate(q, 2, [](std::uint64_t s0, std::uint64_t) { return s0 == 0 ? 1 : 0; });
}

bool translation_bijection_check(const WireFunction& w, const ZqElement& x, const ZqElement& x_prime,
                                 std::uint64_t cap) {
    const Modulus& q = w.modulus();
    if (x.modulus() != q || x_prime.modulus() != q) {
        throw ModulusMismatch("secrets and wire use different moduli");
    }
    if (q.value() > cap) {
        throw CapExceeded("q = " + std::to_string(q.value()) + " exceeds enumeration cap " +
                          std::to_string(cap));
    }
    const ZqElement shift = x_prime - x;
    const std::uint64_t n = q.value();
    std::vector<std::uint8_t> hit(n);
    for (Symbol v = 0; v < w.alphabet(); ++v) {
        std::fill(hit.begin(), hit.end(), 0);
        std::uint64_t source_size = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            const ZqElement s1(q, m);
            if (w(x - s1, s1) != v) continue;
            ++source_size;
            const ZqElement image = s1 + shift;
            if (w(x_prime - image, image) != v) return false;  // not into the target
            if (hit[image.value()]++) return false;             // not injective
        }
        std::uint64_t target_size = 0;
        for (std::uint64_t m = 0; m < n; ++m) {
            const ZqElement s1(q, m);
            if (w(x_prime - s1, s1) == v) {
                ++target_size;
                if (!hit[m]) return false;  // not onto
            }
        }
        if (target_size != source_size) return false;
    }
    return true;
}

}  // namespace maskcheck
