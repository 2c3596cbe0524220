#pragma once

// Exploration harness for sharewise-masked NTT butterflies. Everything here
// is empirical: a clean sweep is evidence about composed stages, not a proof.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maskcheck/wire.hpp"

namespace maskcheck {

struct MaskedValue {
    ZqElement share0;
    ZqElement share1;

    ZqElement recombine() const { return share0 + share1; }
};

/// c = a + t*b, d = a - t*b over Z_q.
struct ButterflyStage {
    ButterflyStage(Modulus q, ZqElement twiddle);

    Modulus q;
    ZqElement twiddle;
};

using Pipeline = std::vector<ButterflyStage>;

std::pair<ZqElement, ZqElement> butterfly_plain(const ButterflyStage& stage, const ZqElement& a,
                                                const ZqElement& b);

/// Applies the stage to each share index independently; share 0 of the
/// outputs only ever combines share 0 of the inputs, likewise share 1.
std::pair<MaskedValue, MaskedValue> butterfly_masked(const ButterflyStage& stage, const MaskedValue& a,
                                                     const MaskedValue& b);

/// Plain values after running every stage, feeding (c, d) into the next
/// stage as (a, b).
std::pair<ZqElement, ZqElement> pipeline_plain(const Pipeline& pipeline, ZqElement a, ZqElement b);

// Per-stage signal inventory. The *Rec signals are adversarial probes that
// add both shares back together; every other signal is a single share.
enum class Signal : std::uint8_t { A0, A1, B0, B1, TB0, TB1, C0, C1, D0, D1, ARec, BRec, CRec, DRec };
inline constexpr std::size_t kSignalCount = 14;

std::string_view to_string(Signal s) noexcept;
constexpr bool is_recombination(Signal s) noexcept { return s >= Signal::ARec; }

struct Tap {
    std::size_t stage = 0;
    Signal signal = Signal::A0;
};

enum class SecretRole : std::uint8_t { A, B };
std::string_view to_string(SecretRole r) noexcept;

/// Shares of the plain input that is not the secret.
struct FixedContext {
    ZqElement other_share0;
    ZqElement other_share1;
};

using StageSignals = std::array<std::uint64_t, kSignalCount>;

/// Every signal of every stage for concrete masked inputs.
std::vector<StageSignals> evaluate_trace(const Pipeline& pipeline, const MaskedValue& a, const MaskedValue& b);

// Share dependence of a signal: which input shares flow into it.
enum ShareTaint : std::uint8_t {
    kSecretShare0 = 1,
    kSecretShare1 = 2,
    kOtherShare0 = 4,
    kOtherShare1 = 8,
};
using StageTaint = std::array<std::uint8_t, kSignalCount>;

/// Symbolic run of the same stage arithmetic, propagating share taint.
std::vector<StageTaint> taint_trace(std::size_t stages, SecretRole role);

/// True iff no single-share signal carries both shares of one plain input.
bool sharewise_isolated(const std::vector<StageTaint>& taint);

/// Tabulates the tap as a function of the secret's shares (s0, s1), with
/// alphabet Z_q.
WireFunction extract_wire_function(const Pipeline& pipeline, const Tap& tap, SecretRole role,
                                   const FixedContext& context, std::uint64_t max_q = 64);

struct SweepConfig {
    std::uint64_t q = 5;
    std::size_t stages = 1;
    std::vector<std::uint64_t> twiddles;  // every stage draws from this set
    bool include_recombination = true;
    unsigned workers = 1;
};

inline constexpr std::uint64_t kSweepMaxModulus = 7;
inline constexpr std::size_t kSweepMaxStages = 3;

struct TapSummary {
    Tap tap;
    SecretRole role = SecretRole::A;
    std::array<std::uint64_t, 3> verdicts{};  // indexed by Verdict

    bool recombination() const noexcept { return is_recombination(tap.signal); }
    std::uint64_t count(Verdict v) const noexcept { return verdicts[static_cast<std::size_t>(v)]; }
};

struct SweepReport {
    std::uint64_t q = 0;
    std::size_t stages = 0;
    std::vector<std::uint64_t> twiddles;
    std::uint64_t configurations = 0;  // twiddle tuples x roles x contexts
    std::uint64_t wires_classified = 0;
    std::vector<TapSummary> taps;
    std::uint64_t sharewise_non_constant = 0;  // would-be counterexamples
    std::uint64_t recombination_flagged = 0;   // recombination taps that are not value-independent
    std::uint64_t recombination_value_independent = 0;
    bool isolation_holds = false;

    static constexpr std::string_view kCaveat =
        "empirical sweep over a finite configuration space; a clean result is evidence, not proof";
};

/// Exhaustive over twiddle tuples, secret roles, fixed contexts, secret
/// shares and taps. Throws CapExceeded outside q <= 7, stages <= 3.
SweepReport conjecture_sweep(const SweepConfig& config);

}  // namespace maskcheck
