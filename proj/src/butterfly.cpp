#include "maskcheck/butterfly.hpp"

#include <algorithm>
#include <thread>

namespace maskcheck {

namespace {

// Stage arithmetic shared by the concrete and the symbolic (taint) runs.
template <class Ops>
std::array<typename Ops::Value, kSignalCount> stage_signals(const Ops& ops, typename Ops::Value a0,
                                                            typename Ops::Value a1, typename Ops::Value b0,
                                                            typename Ops::Value b1) {
    const auto tb0 = ops.scale(b0);
    const auto tb1 = ops.scale(b1);
    const auto c0 = ops.add(a0, tb0);
    const auto c1 = ops.add(a1, tb1);
    const auto d0 = ops.sub(a0, tb0);
    const auto d1 = ops.sub(a1, tb1);
    return {a0, a1, b0, b1, tb0, tb1, c0, c1, d0, d1,
            ops.add(a0, a1), ops.add(b0, b1), ops.add(c0, c1), ops.add(d0, d1)};
}

struct ResidueOps {
    using Value = std::uint64_t;
    std::uint64_t q;
    std::uint64_t twiddle;

    Value scale(Value v) const { return static_cast<Value>((static_cast<unsigned __int128>(twiddle) * v) % q); }
    Value add(Value u, Value v) const { return (u + v) % q; }
    Value sub(Value u, Value v) const { return (u + q - v) % q; }
};

struct TaintOps {
    using Value = std::uint8_t;
    Value scale(Value v) const { return v; }
    Value add(Value u, Value v) const { return u | v; }
    Value sub(Value u, Value v) const { return u | v; }
};

constexpr std::size_t idx(Signal s) { return static_cast<std::size_t>(s); }

void require_same_modulus(const Modulus& q, const ZqElement& e) {
    if (e.modulus() != q) throw ModulusMismatch("operand modulus differs from the stage modulus");
}

// Runs all stages on raw residues, writing each stage's signals to out.
void trace_into(std::uint64_t q, std::span<const std::uint64_t> twiddles, std::uint64_t a0, std::uint64_t a1,
                std::uint64_t b0, std::uint64_t b1, StageSignals* out) {
    for (std::size_t k = 0; k < twiddles.size(); ++k) {
        out[k] = stage_signals(ResidueOps{q, twiddles[k]}, a0, a1, b0, b1);
        a0 = out[k][idx(Signal::C0)];
        a1 = out[k][idx(Signal::C1)];
        b0 = out[k][idx(Signal::D0)];
        b1 = out[k][idx(Signal::D1)];
    }
}

}  // namespace

ButterflyStage::ButterflyStage(Modulus modulus, ZqElement t) : q(modulus), twiddle(t) {
    require_same_modulus(q, twiddle);
}

std::pair<ZqElement, ZqElement> butterfly_plain(const ButterflyStage& stage, const ZqElement& a,
                                                const ZqElement& b) {
    require_same_modulus(stage.q, a);
    require_same_modulus(stage.q, b);
    const ZqElement tb = stage.twiddle * b;
    return {a + tb, a - tb};
}

std::pair<MaskedValue, MaskedValue> butterfly_masked(const ButterflyStage& stage, const MaskedValue& a,
                                                     const MaskedValue& b) {
    for (const ZqElement* e : {&a.share0, &a.share1, &b.share0, &b.share1}) require_same_modulus(stage.q, *e);
    const Modulus& q = stage.q;
    const auto s = stage_signals(ResidueOps{q.value(), stage.twiddle.value()}, a.share0.value(),
                                 a.share1.value(), b.share0.value(), b.share1.value());
    return {MaskedValue{ZqElement(q, s[idx(Signal::C0)]), ZqElement(q, s[idx(Signal::C1)])},
            MaskedValue{ZqElement(q, s[idx(Signal::D0)]), ZqElement(q, s[idx(Signal::D1)])}};
}

std::pair<ZqElement, ZqElement> pipeline_plain(const Pipeline& pipeline, ZqElement a, ZqElement b) {
    for (const ButterflyStage& stage : pipeline) {
        auto [c, d] = butterfly_plain(stage, a, b);
        a = c;
        b = d;
    }
    return {a, b};
}

std::string_view to_string(Signal s) noexcept {
    static constexpr std::array<std::string_view, kSignalCount> names = {
        "a0", "a1", "b0", "b1", "tb0", "tb1", "c0", "c1", "d0", "d1", "a_rec", "b_rec", "c_rec", "d_rec"};
    return names[idx(s)];
}

std::string_view to_string(SecretRole r) noexcept { return r == SecretRole::A ? "a" : "b"; }

std::vector<StageSignals> evaluate_trace(const Pipeline& pipeline, const MaskedValue& a, const MaskedValue& b) {
    std::vector<StageSignals> out;
    out.reserve(pipeline.size());
    MaskedValue x = a, y = b;
    for (const ButterflyStage& stage : pipeline) {
        for (const ZqElement* e : {&x.share0, &x.share1, &y.share0, &y.share1}) {
            require_same_modulus(stage.q, *e);
        }
        out.push_back(stage_signals(ResidueOps{stage.q.value(), stage.twiddle.value()}, x.share0.value(),
                                    x.share1.value(), y.share0.value(), y.share1.value()));
        const auto& s = out.back();
        x = {ZqElement(stage.q, s[idx(Signal::C0)]), ZqElement(stage.q, s[idx(Signal::C1)])};
        y = {ZqElement(stage.q, s[idx(Signal::D0)]), ZqElement(stage.q, s[idx(Signal::D1)])};
    }
    return out;
}

std::vector<StageTaint> taint_trace(std::size_t stages, SecretRole role) {
    const std::uint8_t secret0 = kSecretShare0, secret1 = kSecretShare1;
    const std::uint8_t other0 = kOtherShare0, other1 = kOtherShare1;
    std::uint8_t a0 = role == SecretRole::A ? secret0 : other0;
    std::uint8_t a1 = role == SecretRole::A ? secret1 : other1;
    std::uint8_t b0 = role == SecretRole::A ? other0 : secret0;
    std::uint8_t b1 = role == SecretRole::A ? other1 : secret1;
    std::vector<StageTaint> out;
    for (std::size_t k = 0; k < stages; ++k) {
        out.push_back(stage_signals(TaintOps{}, a0, a1, b0, b1));
        a0 = out.back()[idx(Signal::C0)];
        a1 = out.back()[idx(Signal::C1)];
        b0 = out.back()[idx(Signal::D0)];
        b1 = out.back()[idx(Signal::D1)];
    }
    return out;
}

bool sharewise_isolated(const std::vector<StageTaint>& taint) {
    constexpr std::uint8_t secret_both = kSecretShare0 | kSecretShare1;
    constexpr std::uint8_t other_both = kOtherShare0 | kOtherShare1;
    for (const StageTaint& stage : taint) {
        for (std::size_t s = 0; s < kSignalCount; ++s) {
            if (is_recombination(static_cast<Signal>(s))) continue;
            if ((stage[s] & secret_both) == secret_both || (stage[s] & other_both) == other_both) return false;
        }
    }
    return true;
}

namespace {

void check_tap(std::size_t stages, const Tap& tap) {
    if (tap.stage >= stages) {
        throw PreconditionViolation("tap stage " + std::to_string(tap.stage) + " beyond a " +
                                    std::to_string(stages) + "-stage pipeline");
    }
    if (idx(tap.signal) >= kSignalCount) throw PreconditionViolation("unknown tap signal");
}

}  // namespace

WireFunction extract_wire_function(const Pipeline& pipeline, const Tap& tap, SecretRole role,
                                   const FixedContext& context, std::uint64_t max_q) {
    if (pipeline.empty()) throw PreconditionViolation("pipeline has no stages");
    check_tap(pipeline.size(), tap);
    const Modulus q = pipeline.front().q;
    if (q.value() > max_q) {
        throw CapExceeded("q = " + std::to_string(q.value()) + " exceeds the enumeration cap " +
                          std::to_string(max_q));
    }
    std::vector<std::uint64_t> twiddles;
    for (const ButterflyStage& stage : pipeline) {
        if (stage.q != q) throw ModulusMismatch("pipeline stages use different moduli");
        twiddles.push_back(stage.twiddle.value());
    }
    require_same_modulus(q, context.other_share0);
    require_same_modulus(q, context.other_share1);
    const std::uint64_t o0 = context.other_share0.value(), o1 = context.other_share1.value();

    std::vector<StageSignals> trace(pipeline.size());
    return WireFunction::tabulate(q, static_cast<Symbol>(q.value()), [&](std::uint64_t s0, std::uint64_t s1) {
        if (role == SecretRole::A)
            trace_into(q.value(), twiddles, s0, s1, o0, o1, trace.data());
        else
            trace_into(q.value(), twiddles, o0, o1, s0, s1, trace.data());
        return trace[tap.stage][idx(tap.signal)];
    });
}

namespace {

struct SweepTally {
    std::vector<std::array<std::uint64_t, 3>> verdicts;  // [role][stage][signal] flattened
    std::uint64_t wires = 0;
};

}  // namespace

SweepReport conjecture_sweep(const SweepConfig& config) {
    if (config.q == 0) throw PreconditionViolation("q must be positive");
    if (config.q > kSweepMaxModulus || config.stages == 0 || config.stages > kSweepMaxStages) {
        throw CapExceeded("sweep is bounded to q <= " + std::to_string(kSweepMaxModulus) + " and 1.." +
                          std::to_string(kSweepMaxStages) + " stages");
    }
    if (config.twiddles.empty()) throw PreconditionViolation("twiddle set is empty");
    const Modulus q(config.q);
    std::vector<std::uint64_t> twiddle_set = config.twiddles;
    for (std::uint64_t t : twiddle_set) {
        if (t >= q.value()) throw PreconditionViolation("twiddle " + std::to_string(t) + " is not below q");
    }
    std::sort(twiddle_set.begin(), twiddle_set.end());
    twiddle_set.erase(std::unique(twiddle_set.begin(), twiddle_set.end()), twiddle_set.end());

    const std::uint64_t n = q.value();
    const std::size_t stages = config.stages;
    std::uint64_t tuples = 1;
    for (std::size_t k = 0; k < stages; ++k) tuples *= twiddle_set.size();
    const std::uint64_t contexts = n * n;
    const std::uint64_t total = tuples * 2 * contexts;

    std::vector<Signal> signals;
    for (std::size_t s = 0; s < kSignalCount; ++s) {
        const auto sig = static_cast<Signal>(s);
        if (config.include_recombination || !is_recombination(sig)) signals.push_back(sig);
    }
    const std::size_t slots = 2 * stages * kSignalCount;

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        SweepTally tally;
        tally.verdicts.assign(slots, {});
        std::vector<std::uint64_t> twiddles(stages);
        std::vector<StageSignals> trace(stages);
        std::vector<std::vector<Symbol>> tables(stages * kSignalCount, std::vector<Symbol>(n * n));
        for (std::uint64_t cfg = begin; cfg < end; ++cfg) {
            // cfg = ((tuple * 2) + role) * contexts + context
            const std::uint64_t context = cfg % contexts;
            const auto role = static_cast<SecretRole>((cfg / contexts) % 2);
            std::uint64_t tuple = cfg / contexts / 2;
            for (std::size_t k = 0; k < stages; ++k) {
                twiddles[k] = twiddle_set[tuple % twiddle_set.size()];
                tuple /= twiddle_set.size();
            }
            const std::uint64_t o0 = context / n, o1 = context % n;
            for (std::uint64_t s0 = 0; s0 < n; ++s0) {
                for (std::uint64_t s1 = 0; s1 < n; ++s1) {
                    if (role == SecretRole::A)
                        trace_into(n, twiddles, s0, s1, o0, o1, trace.data());
                    else
                        trace_into(n, twiddles, o0, o1, s0, s1, trace.data());
                    for (std::size_t k = 0; k < stages; ++k)
                        for (Signal sig : signals)
                            tables[k * kSignalCount + idx(sig)][s0 * n + s1] =
                                static_cast<Symbol>(trace[k][idx(sig)]);
                }
            }
            for (std::size_t k = 0; k < stages; ++k) {
                for (Signal sig : signals) {
                    const WireFunction w(q, static_cast<Symbol>(n), tables[k * kSignalCount + idx(sig)]);
                    const Verdict v = classify(w);
                    const std::size_t slot = (static_cast<std::size_t>(role) * stages + k) * kSignalCount + idx(sig);
                    ++tally.verdicts[slot][static_cast<std::size_t>(v)];
                    ++tally.wires;
                }
            }
        }
        return tally;
    };

    const std::uint64_t chunks = std::clamp<std::uint64_t>(config.workers, 1, total);
    std::vector<SweepTally> partial(chunks);
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = total * c / chunks, end = total * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] { partial[c] = run_range(begin, end); });
    }
    for (auto& th : pool) th.join();

    SweepReport report;
    report.q = n;
    report.stages = stages;
    report.twiddles = twiddle_set;
    report.configurations = total;
    report.isolation_holds = sharewise_isolated(taint_trace(stages, SecretRole::A)) &&
                             sharewise_isolated(taint_trace(stages, SecretRole::B));
    for (SecretRole role : {SecretRole::A, SecretRole::B}) {
        for (std::size_t k = 0; k < stages; ++k) {
            for (Signal sig : signals) {
                TapSummary summary{Tap{k, sig}, role, {}};
                const std::size_t slot = (static_cast<std::size_t>(role) * stages + k) * kSignalCount + idx(sig);
                for (const SweepTally& t : partial)
                    for (std::size_t v = 0; v < 3; ++v) summary.verdicts[v] += t.verdicts[slot][v];
                if (summary.recombination()) {
                    report.recombination_value_independent += summary.count(Verdict::ValueIndependent);
                    report.recombination_flagged += summary.count(Verdict::ConstantMarginalOnly) +
                                                    summary.count(Verdict::NonConstantMarginal);
                } else {
                    report.sharewise_non_constant += summary.count(Verdict::NonConstantMarginal);
                }
                report.taps.push_back(summary);
            }
        }
    }
    for (const SweepTally& t : partial) report.wires_classified += t.wires;
    return report;
}

}  // namespace maskcheck
