#include "maskcheck/rng_bias.hpp"

#include <algorithm>
#include <numeric>

namespace maskcheck {

namespace {

constexpr std::uint64_t kPerResidueLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kDirectIterationLimit = std::uint64_t{1} << 20;

}  // namespace

Rational Rational::reduced(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw PreconditionViolation("zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

BiasProfile::BiasProfile(std::uint64_t sample_space, Modulus q, std::vector<CountRun> runs)
    : n_(sample_space), q_(q), runs_(std::move(runs)) {
    if (n_ == 0) throw PreconditionViolation("sample space must be non-empty");
    std::uint64_t covered = 0;
    min_ = ~std::uint64_t{0};
    for (const CountRun& run : runs_) {
        if (run.first != covered || run.last <= run.first) {
            throw PreconditionViolation("count runs must tile [0, q) in order");
        }
        covered = run.last;
        min_ = std::min(min_, run.count);
        max_ = std::max(max_, run.count);
    }
    if (covered != q_.value()) throw PreconditionViolation("count runs must tile [0, q)");
    if (min_ > 0) ratio_ = Rational::reduced(max_, min_);
}

std::uint64_t BiasProfile::count(std::uint64_t residue) const {
    const auto it = std::upper_bound(runs_.begin(), runs_.end(), residue,
                                     [](std::uint64_t r, const CountRun& run) { return r < run.last; });
    if (it == runs_.end()) throw PreconditionViolation("residue not below q");
    return it->count;
}

std::vector<std::uint64_t> BiasProfile::counts(std::uint64_t cap) const {
    if (q_.value() > cap) {
        throw CapExceeded("refusing to expand " + std::to_string(q_.value()) + " residue counts");
    }
    std::vector<std::uint64_t> out(q_.value());
    for (const CountRun& run : runs_) std::fill(out.begin() + run.first, out.begin() + run.last, run.count);
    return out;
}

std::uint64_t residue_count(std::uint64_t sample_space, const Modulus& q, std::uint64_t residue) {
    if (residue >= q.value()) throw PreconditionViolation("residue not below q");
    if (residue >= sample_space) return 0;
    return (sample_space - 1 - residue) / q.value() + 1;
}

BiasProfile bias_profile(std::uint64_t sample_space, const Modulus& q) {
    if (sample_space == 0) throw PreconditionViolation("N must be positive");
    // N = base * q + extra: residues below `extra` see one more hit.
    const std::uint64_t base = sample_space / q.value();
    const std::uint64_t extra = sample_space % q.value();
    std::vector<CountRun> runs;
    if (extra > 0) runs.push_back({0, extra, base + 1});
    runs.push_back({extra, q.value(), base});
    return BiasProfile(sample_space, q, std::move(runs));
}

bool verify_bounds(const BiasProfile& profile) {
    const std::uint64_t n = profile.sample_space();
    const std::uint64_t q = profile.modulus().value();
    const std::uint64_t floor_bound = n / q;
    const std::uint64_t ceil_bound = floor_bound + (n % q != 0);
    const bool exact = n % q == 0;

    auto in_bounds = [&](std::uint64_t c) {
        return floor_bound <= c && c <= ceil_bound && (!exact || c == floor_bound);
    };

    if (q <= kPerResidueLimit) {
        std::vector<std::uint64_t> derived(q, 0);
        if (n <= kDirectIterationLimit) {
            for (std::uint64_t v = 0; v < n; ++v) ++derived[v % q];
        } else {
            for (std::uint64_t r = 0; r < q; ++r) derived[r] = residue_count(n, profile.modulus(), r);
        }
        std::uint64_t sum = 0;
        for (std::uint64_t r = 0; r < q; ++r) {
            const std::uint64_t c = profile.count(r);
            if (c != derived[r] || !in_bounds(c)) return false;
            sum += c;
        }
        return sum == n;
    }

    // Counts are constant on each run; check both ends of every run against
    // the closed form and the total mass against N.
    unsigned __int128 sum = 0;
    for (const CountRun& run : profile.runs()) {
        if (!in_bounds(run.count)) return false;
        if (residue_count(n, profile.modulus(), run.first) != run.count ||
            residue_count(n, profile.modulus(), run.last - 1) != run.count) {
            return false;
        }
        sum += static_cast<unsigned __int128>(run.count) * (run.last - run.first);
    }
    return sum == n;
}

}  // namespace maskcheck
