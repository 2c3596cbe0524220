#include "maskcheck/report.hpp"

#include <sstream>

#include "maskcheck/streams.hpp"

namespace maskcheck::report {

namespace {

Json verdict_counts(const std::array<std::uint64_t, 3>& counts) {
    Json j;
    for (Verdict v : {Verdict::ValueIndependent, Verdict::ConstantMarginalOnly, Verdict::NonConstantMarginal}) {
        j[std::string(to_string(v))] = counts[static_cast<std::size_t>(v)];
    }
    return j;
}

Json histogram_rows(const MarginalHistogram& h) {
    Json rows = Json::array();
    for (std::uint64_t x = 0; x < h.modulus().value(); ++x) {
        const auto r = h.row(x);
        rows.push_back(std::vector<std::uint64_t>(r.begin(), r.end()));
    }
    return rows;
}

Json mi_json(const MutualInformation& mi) {
    Json j;
    j["bits"] = mi.bits;
    j["is_zero"] = mi.is_zero;
    j["unit"] = "bits";
    return j;
}

}  // namespace

Json header(std::string_view command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

Json classify(const WireFunction& w) {
    const MarginalHistogram h = marginal_histogram(w);
    const Verdict v = maskcheck::classify(w);
    Json j = header("classify");
    j["q"] = w.modulus().value();
    j["alphabet"] = w.alphabet();
    j["verdict"] = to_string(v);
    j["value_independent"] = v == Verdict::ValueIndependent;
    j["constant_marginal"] = v != Verdict::NonConstantMarginal;
    j["histogram"] = histogram_rows(h);
    j["mutual_information"] = mi_json(mutual_information(h));
    return j;
}

Json census(const CensusReport& r, bool include_timing) {
    Json j = header("census");
    j["q"] = r.q;
    j["total_wires"] = r.total_wires;
    j["value_independent"] = r.value_independent;
    j["constant_marginal"] = r.constant_marginal;
    j["conservative"] = r.conservative;
    j["non_constant"] = r.non_constant;
    j["soundness_violations"] = r.soundness_violations;
    j["formula_constant_marginal"] = constant_marginal_count_formula(r.q);
    if (include_timing) j["wall_time_seconds"] = r.wall_time.count();
    return j;
}

std::string census_csv(const CensusReport& r) {
    std::ostringstream out;
    out << "q,verdict,count\n";
    out << r.q << ",VALUE_INDEPENDENT," << r.value_independent << "\n";
    out << r.q << ",CONSTANT_MARGINAL_ONLY," << r.conservative << "\n";
    out << r.q << ",NON_CONSTANT_MARGINAL," << r.non_constant << "\n";
    return out.str();
}

Json spot_check(const SpotCheck& s) {
    Json j = header("census.spot");
    j["q"] = s.q;
    j["wire_index"] = s.wire_index;
    j["table"] = std::vector<Symbol>(s.wire.table().begin(), s.wire.table().end());
    j["verdict"] = to_string(s.verdict);
    j["histogram"] = histogram_rows(s.histogram);
    if (s.mask_only_dependence)
        j["mask_only_dependence"] = *s.mask_only_dependence;
    else
        j["mask_only_dependence"] = nullptr;
    return j;
}

Json bias(const BiasProfile& p) {
    const std::uint64_t n = p.sample_space(), q = p.modulus().value();
    Json j = header("bias");
    j["n"] = n;
    j["q"] = q;
    j["min_count"] = p.min_count();
    j["max_count"] = p.max_count();
    j["ratio"] = p.ratio() ? p.ratio()->to_string() : std::string("DEGENERATE");
    j["divides_exactly"] = p.divides_exactly();
    j["floor_bound"] = n / q;
    j["ceil_bound"] = n / q + (n % q != 0);
    j["bounds_verified"] = verify_bounds(p);
    Json runs = Json::array();
    for (const CountRun& run : p.runs()) {
        Json r;
        r["first"] = run.first;
        r["last"] = run.last - 1;
        r["count"] = run.count;
        runs.push_back(r);
    }
    j["runs"] = runs;
    if (q <= kFullCountsLimit)
        j["counts"] = p.counts();
    else
        j["counts"] = nullptr;
    return j;
}

std::string bias_csv(const BiasProfile& p) {
    std::ostringstream out;
    out << "residue,count\n";
    for (std::uint64_t r = 0; r < p.modulus().value(); ++r) out << r << "," << p.count(r) << "\n";
    return out.str();
}

Json bounds(const WidthConfig& cfg) {
    const std::uint64_t q = cfg.q.value();
    Json j = header("bounds");
    j["q"] = q;
    j["w"] = cfg.width;
    j["two_q"] = 2 * q;
    j["admissible"] = cfg.admissible();
    // Extremes of x + q - s1 over x, s1 < q.
    const OverflowBounds lo = no_overflow_bounds(q, 0, q - 1);
    const OverflowBounds hi = no_overflow_bounds(q, q - 1, 0);
    j["intermediate_min"] = lo.intermediate;
    j["intermediate_max"] = hi.intermediate;
    j["range_ok"] = lo.lower_ok && lo.upper_ok && hi.lower_ok && hi.upper_ok;
    return j;
}

UremCheckResult urem_check(const WidthConfig& cfg, std::uint64_t seed, std::uint64_t samples) {
    const Modulus& q = cfg.q;
    UremCheckResult r;
    r.q = q.value();
    r.width = cfg.width;
    r.seed = seed;
    auto check = [&](std::uint64_t x, std::uint64_t s1) {
        ++r.pairs;
        const Word s0 = urem_reparam(cfg, Word(cfg.width, x), Word(cfg.width, s1));
        const ZqElement ring = arith_reparam(q, ZqElement(q, x), ZqElement(q, s1));
        if (s0.value() != ring.value()) ++r.mismatches;
        if (urem_recombine(cfg, s0, Word(cfg.width, s1)).value() != x) ++r.round_trip_failures;
        const OverflowBounds b = no_overflow_bounds(q.value(), x, s1);
        if (!b.lower_ok || !b.upper_ok) ++r.bound_violations;
    };
    if (q.value() <= 64) {
        r.mode = "exhaustive";
        for (std::uint64_t x = 0; x < q.value(); ++x)
            for (std::uint64_t s1 = 0; s1 < q.value(); ++s1) check(x, s1);
    } else {
        r.mode = "sampled";
        auto rng = named_stream(seed, "urem-check");
        std::uniform_int_distribution<std::uint64_t> draw(0, q.value() - 1);
        for (std::uint64_t i = 0; i < samples; ++i) {
            const std::uint64_t x = draw(rng);
            check(x, draw(rng));
        }
    }
    return r;
}

Json urem(const UremCheckResult& r) {
    Json j = header("urem-check");
    j["q"] = r.q;
    j["w"] = r.width;
    j["mode"] = r.mode;
    j["seed"] = r.seed;
    j["pairs"] = r.pairs;
    j["mismatches"] = r.mismatches;
    j["round_trip_failures"] = r.round_trip_failures;
    j["bound_violations"] = r.bound_violations;
    return j;
}

WitnessResult witness_check(const Modulus& q, std::uint64_t seed, std::uint64_t pairs) {
    const WireFunction w = t6_witness(q);
    const MarginalHistogram h = marginal_histogram(w);
    WitnessResult r;
    r.q = q.value();
    r.verdict = maskcheck::classify(w);
    r.mi = mutual_information(h);
    const auto row = h.row(0);
    r.row.assign(row.begin(), row.end());
    const ZqElement zero(q, 0), one(q, 1);
    r.counterexample_holds = w(zero - zero, zero) != w(one - zero, zero);
    r.seed = seed;
    auto rng = named_stream(seed, "witness");
    std::uniform_int_distribution<std::uint64_t> draw(0, q.value() - 1);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        const ZqElement x(q, draw(rng));
        const ZqElement x_prime(q, draw(rng));
        ++r.translation_pairs;
        if (!translation_bijection_check(w, x, x_prime)) ++r.translation_failures;
    }
    return r;
}

Json witness(const WitnessResult& r) {
    Json j = header("witness");
    j["q"] = r.q;
    j["wire"] = "[s0 == 0]";
    j["verdict"] = to_string(r.verdict);
    j["marginal_row"] = r.row;
    j["mutual_information"] = mi_json(r.mi);
    j["counterexample_holds"] = r.counterexample_holds;
    j["seed"] = r.seed;
    j["translation_pairs"] = r.translation_pairs;
    j["translation_failures"] = r.translation_failures;
    return j;
}

Json butterfly(const SweepReport& r) {
    Json j = header("butterfly");
    j["q"] = r.q;
    j["stages"] = r.stages;
    j["twiddles"] = r.twiddles;
    j["configurations"] = r.configurations;
    j["wires_classified"] = r.wires_classified;
    j["sharewise_isolation"] = r.isolation_holds;
    j["sharewise_non_constant"] = r.sharewise_non_constant;
    j["recombination_flagged"] = r.recombination_flagged;
    j["recombination_value_independent"] = r.recombination_value_independent;
    Json taps = Json::array();
    for (const TapSummary& t : r.taps) {
        Json e;
        e["stage"] = t.tap.stage;
        e["signal"] = to_string(t.tap.signal);
        e["secret"] = to_string(t.role);
        e["kind"] = t.recombination() ? "recombination" : "share";
        e["verdicts"] = verdict_counts(t.verdicts);
        taps.push_back(e);
    }
    j["taps"] = taps;
    j["caveat"] = SweepReport::kCaveat;
    return j;
}

}  // namespace maskcheck::report
