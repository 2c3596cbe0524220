// maskcheck: command-line front end for the masking analyses.
//
// Exit codes: 0 success (any verdict), 2 bad parameters or malformed input,
// 3 a property that must always hold was observed to fail.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "maskcheck/report.hpp"
#include "maskcheck/wire_io.hpp"

namespace {

using maskcheck::report::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

enum class Format { Human, Json, Csv };

unsigned default_workers() {
    if (const char* env = std::getenv("MASKCHECK_WORKERS")) {
        try {
            const unsigned long v = std::stoul(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Flat "key: value" rendering of a report for terminals.
void print_human(const Json& j, std::ostream& out, const std::string& prefix = "") {
    for (const auto& [key, value] : j.items()) {
        if (key == "schema") continue;
        if (value.is_object()) {
            print_human(value, out, prefix + key + ".");
        } else if (value.is_array() && value.size() > 16) {
            out << prefix << key << ": [" << value.size() << " entries, use --format json]\n";
        } else {
            out << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        }
    }
}

int emit(const Json& j, Format fmt, const std::string& csv = {}) {
    switch (fmt) {
        case Format::Json: std::cout << j.dump(2) << "\n"; break;
        case Format::Csv:
            if (csv.empty()) {
                std::cerr << "error: csv output is not available for '" << j["command"].get<std::string>() << "'\n";
                return kExitUsage;
            }
            std::cout << csv;
            break;
        case Format::Human: print_human(j, std::cout); break;
    }
    return kExitOk;
}

struct Options {
    Format format = Format::Human;
    std::string wire_path;
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    unsigned bits = 0;
    unsigned width = 24;
    unsigned workers = 0;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::uint64_t pairs = 100;
    std::int64_t spot = -1;
    bool timing = false;
    std::size_t stages = 1;
    std::vector<std::uint64_t> twiddles;
    bool share_only = false;
    std::string write_wire;
};

void add_format(CLI::App* cmd, Options& opt) {
    const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
    cmd->add_option("--format", opt.format, "Output format: human, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

int run_classify(const Options& opt) {
    maskcheck::WireFunction w = [&] {
        try {
            return maskcheck::load_wire_file(opt.wire_path);
        } catch (const maskcheck::WireFormatError& e) {
            std::ostringstream msg;
            msg << opt.wire_path << ": " << e.what();
            if (e.offset()) msg << " (at byte " << *e.offset() << ")";
            throw maskcheck::WireFormatError(msg.str(), e.offset());
        }
    }();
    return emit(maskcheck::report::classify(w), opt.format);
}

int run_census(const Options& opt) {
    const maskcheck::Modulus q(opt.q);
    if (opt.spot >= 0) {
        return emit(maskcheck::report::spot_check(maskcheck::spot_check(q, static_cast<std::uint64_t>(opt.spot))),
                    opt.format);
    }
    const auto r = maskcheck::run_census(q, opt.workers ? opt.workers : default_workers());
    const int rc = emit(maskcheck::report::census(r, opt.timing), opt.format, maskcheck::report::census_csv(r));
    if (opt.timing && opt.format != Format::Json) std::cerr << "wall time: " << r.wall_time.count() << " s\n";
    if (r.soundness_violations != 0 || r.constant_marginal != maskcheck::constant_marginal_count_formula(r.q)) {
        std::cerr << "census found a soundness violation or a formula mismatch\n";
        return kExitViolation;
    }
    return rc;
}

int run_bias(const Options& opt) {
    std::uint64_t n = opt.n;
    if (opt.bits > 0) {
        if (opt.bits > 63) throw maskcheck::PreconditionViolation("--bits must be at most 63");
        n = std::uint64_t{1} << opt.bits;
    }
    if (n == 0) throw maskcheck::PreconditionViolation("give --n or --bits");
    const auto profile = maskcheck::bias_profile(n, maskcheck::Modulus(opt.q));
    const Json j = maskcheck::report::bias(profile);
    const std::string csv = profile.modulus().value() <= maskcheck::report::kFullCountsLimit
                                ? maskcheck::report::bias_csv(profile)
                                : std::string{};
    const int rc = emit(j, opt.format, csv);
    if (!j["bounds_verified"].get<bool>()) return kExitViolation;
    return rc;
}

int run_bounds(const Options& opt) {
    const maskcheck::WidthConfig cfg(maskcheck::Modulus(opt.q), opt.width);
    const Json j = maskcheck::report::bounds(cfg);
    const int rc = emit(j, opt.format);
    return j["range_ok"].get<bool>() ? rc : kExitViolation;
}

int run_urem(const Options& opt) {
    const maskcheck::WidthConfig cfg(maskcheck::Modulus(opt.q), opt.width);
    if (!cfg.admissible()) {
        throw maskcheck::PreconditionViolation("width " + std::to_string(opt.width) + " is inadmissible for q = " +
                                               std::to_string(opt.q) + " (needs 2q < 2^w)");
    }
    const auto r = maskcheck::report::urem_check(cfg, opt.seed, opt.samples);
    const int rc = emit(maskcheck::report::urem(r), opt.format);
    return r.mismatches || r.round_trip_failures || r.bound_violations ? kExitViolation : rc;
}

int run_witness(const Options& opt) {
    const maskcheck::Modulus q(opt.q);
    const auto r = maskcheck::report::witness_check(q, opt.seed, opt.pairs);
    if (!opt.write_wire.empty()) {
        std::ofstream out(opt.write_wire);
        if (!out) throw maskcheck::PreconditionViolation("cannot write " + opt.write_wire);
        out << maskcheck::wire_to_json(maskcheck::t6_witness(q)) << "\n";
    }
    const int rc = emit(maskcheck::report::witness(r), opt.format);
    const bool ok = r.verdict == maskcheck::Verdict::ConstantMarginalOnly && r.counterexample_holds &&
                    r.translation_failures == 0 && r.mi.is_zero;
    return ok ? rc : kExitViolation;
}

int run_butterfly(const Options& opt) {
    maskcheck::SweepConfig cfg;
    cfg.q = opt.q;
    cfg.stages = opt.stages;
    cfg.twiddles = opt.twiddles;
    if (cfg.twiddles.empty())
        for (std::uint64_t t = 0; t < opt.q; ++t) cfg.twiddles.push_back(t);
    cfg.include_recombination = !opt.share_only;
    cfg.workers = opt.workers ? opt.workers : default_workers();
    const auto r = maskcheck::conjecture_sweep(cfg);
    const int rc = emit(maskcheck::report::butterfly(r), opt.format);
    return r.sharewise_non_constant == 0 && r.isolation_holds ? rc : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maskcheck: first-order arithmetic masking analyses over Z/qZ"};
    app.require_subcommand(1);
    Options opt;

    auto* classify = app.add_subcommand("classify", "Classify a wire function read from a JSON file");
    classify->add_option("wire", opt.wire_path, "Wire-function JSON file")->required();
    add_format(classify, opt);

    auto* census = app.add_subcommand("census", "Classify every Boolean wire function at q <= 5");
    census->add_option("--q", opt.q, "Modulus")->required();
    census->add_option("--workers", opt.workers, "Worker threads (default: MASKCHECK_WORKERS or all cores)");
    census->add_option("--spot", opt.spot, "Report a single wire index instead of the census");
    census->add_flag("--timing", opt.timing, "Include wall time (output no longer byte-stable)");
    add_format(census, opt);

    auto* bias = app.add_subcommand("bias", "Residue counts of [0, N) reduced mod q");
    bias->add_option("--n", opt.n, "Sample-space size N");
    bias->add_option("--bits", opt.bits, "Use N = 2^bits");
    bias->add_option("--q", opt.q, "Modulus")->required();
    add_format(bias, opt);

    auto* bounds = app.add_subcommand("bounds", "Width admissibility and range of x + q - s1");
    bounds->add_option("--q", opt.q, "Modulus")->required();
    bounds->add_option("--w", opt.width, "Word width in bits")->required();
    add_format(bounds, opt);

    auto* urem = app.add_subcommand("urem-check", "Compare the w-bit URem encoding with ring reparametrization");
    urem->add_option("--q", opt.q, "Modulus")->required();
    urem->add_option("--w", opt.width, "Word width in bits");
    urem->add_option("--seed", opt.seed, "Seed for sampled pairs");
    urem->add_option("--samples", opt.samples, "Sampled pairs when q > 64");
    add_format(urem, opt);

    auto* witness = app.add_subcommand("witness", "Check the [s0 == 0] constant-marginal witness");
    witness->add_option("--q", opt.q, "Modulus, at least 2")->required();
    witness->add_option("--seed", opt.seed, "Seed for translation pairs");
    witness->add_option("--pairs", opt.pairs, "Translation-bijection pairs to check");
    witness->add_option("--write-wire", opt.write_wire, "Also write the witness as a wire file");
    add_format(witness, opt);

    auto* butterfly = app.add_subcommand("butterfly", "Sweep taps of sharewise-masked butterfly pipelines");
    butterfly->add_option("--q", opt.q, "Modulus, at most 7")->required();
    butterfly->add_option("--stages", opt.stages, "Pipeline stages, 1 to 3");
    butterfly->add_option("--twiddles", opt.twiddles, "Twiddle set (default: all of Z_q)")->delimiter(',');
    butterfly->add_option("--workers", opt.workers, "Worker threads");
    butterfly->add_flag("--share-only", opt.share_only, "Skip the recombination probes");
    add_format(butterfly, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify) return run_classify(opt);
        if (*census) return run_census(opt);
        if (*bias) return run_bias(opt);
        if (*bounds) return run_bounds(opt);
        if (*urem) return run_urem(opt);
        if (*witness) return run_witness(opt);
        if (*butterfly) return run_butterfly(opt);
    } catch (const maskcheck::InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return kExitViolation;
    } catch (const maskcheck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
