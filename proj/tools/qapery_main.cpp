// Command-line front end: batch theorem verification (verify), object
// construction (compute), and continuation of interrupted sweeps (resume).
//
// Exit codes: 0 all checks passed, 1 at least one mathematical failure
// (witness recorded), 2 usage error, 3 I/O error.

#include <qapery/json_io.hpp>
#include <qapery/sweep.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using namespace qapery;

// Ranges are written "lo..hi"; a bare "v" means "v..v".
std::optional<Range> parse_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return Range{v, v};
        }
        return Range{std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct VerifyArgs {
    std::string theorem;
    std::map<std::string, std::string> ranges;   // flag name -> raw text
    std::string sign;
    int workers = 1;
    std::string out;
    bool deterministic = false;
    bool emit_quotients = false;
};

std::optional<SweepSpec> build_spec(const VerifyArgs& args, std::string& error) {
    SweepSpec spec;
    auto theorem = theorem_from_string(args.theorem);
    if (!theorem) {
        error = "unknown theorem '" + args.theorem + "'";
        return std::nullopt;
    }
    spec.theorem = *theorem;
    for (const auto& [name, text] : args.ranges) {
        auto range = parse_range(text);
        if (!range) {
            error = "bad range for --" + name + ": '" + text + "' (expected lo..hi)";
            return std::nullopt;
        }
        spec.ranges[name] = *range;
    }
    if (args.sign.empty())
        spec.sign = SignOpt::theorem_default;
    else if (args.sign == "+1" || args.sign == "plus")
        spec.sign = SignOpt::plus;
    else if (args.sign == "-1" || args.sign == "minus")
        spec.sign = SignOpt::minus;
    else if (args.sign == "both")
        spec.sign = SignOpt::both;
    else {
        error = "bad --sign '" + args.sign + "' (expected +1, -1 or both)";
        return std::nullopt;
    }
    spec.workers = std::max(1, args.workers);
    spec.out_path = args.out;
    spec.deterministic = args.deterministic;
    spec.emit_quotients = args.emit_quotients;
    return spec;
}

void add_range_options(CLI::App* cmd, VerifyArgs& args) {
    for (const char* name : {"n", "m", "alpha", "d", "p", "a", "h", "b", "l"}) {
        cmd->add_option_function<std::string>(
            std::string("--") + name,
            [&args, name = std::string(name)](const std::string& v) { args.ranges[name] = v; },
            std::string("range for ") + name + " as lo..hi (or a single value)");
    }
}

struct ComputeArgs {
    std::string family;
    long n = -1;
    long k = -1;
    long alpha = 1;
    long d = -1;
    long limit = -1;
};

int run_compute(const ComputeArgs& args) {
    Json out;
    if (args.family == "apery") {
        if (args.n < 0 || args.alpha < 1) {
            std::cerr << "compute apery: need --n >= 0 and --alpha >= 1\n";
            return kExitUsage;
        }
        out = to_json(apery_poly(args.n, args.alpha));
    } else if (args.family == "delannoy") {
        if (args.n < 0) {
            std::cerr << "compute delannoy: need --n >= 0\n";
            return kExitUsage;
        }
        out = to_json(delannoy_poly(args.n));
    } else if (args.family == "q-apery") {
        if (args.k < 0 || args.alpha < 1) {
            std::cerr << "compute q-apery: need --k >= 0 and --alpha >= 1\n";
            return kExitUsage;
        }
        out = to_json(q_apery_poly(args.k, args.alpha));
    } else if (args.family == "cyclotomic") {
        if (args.d < 1) {
            std::cerr << "compute cyclotomic: need --d >= 1\n";
            return kExitUsage;
        }
        CyclotomicCache cyclo;
        out = to_json(cyclo.get(args.d));
    } else if (args.family == "eta") {
        if (args.limit < 1) {
            std::cerr << "compute eta: need --limit >= 1\n";
            return kExitUsage;
        }
        out = to_json(eta_product_coeffs(args.limit));
    } else {
        std::cerr << "unknown family '" << args.family
                  << "' (expected apery, delannoy, q-apery, cyclotomic or eta)\n";
        return kExitUsage;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Apery-polynomial power-sum congruences"};
    app.require_subcommand(1);
    // "--h" is the q-Lucas row parameter, so help stays long-form only.
    app.set_help_flag("--help", "print help");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a theorem sweep");
    verify_cmd->set_help_flag("--help", "print help");
    verify_cmd->add_option("--theorem", verify_args.theorem, "theorem id (e.g. T1E1, QT_PLUS)")
        ->required();
    add_range_options(verify_cmd, verify_args);
    verify_cmd->add_option("--sign", verify_args.sign, "+1, -1 or both (T1E1/T1E2 only)");
    verify_cmd->add_option("--workers", verify_args.workers, "parallel verification workers");
    verify_cmd->add_option("--out", verify_args.out, "JSON-lines output file")->required();
    verify_cmd->add_flag("--deterministic", verify_args.deterministic,
                         "omit elapsed_ms so repeated runs are byte-identical");
    verify_cmd->add_flag("--emit-quotients", verify_args.emit_quotients,
                         "include quotient witnesses in passing records");

    ComputeArgs compute_args;
    CLI::App* compute_cmd = app.add_subcommand("compute", "print one object as JSON");
    compute_cmd->set_help_flag("--help", "print help");
    compute_cmd
        ->add_option("--family", compute_args.family,
                     "apery | delannoy | q-apery | cyclotomic | eta")
        ->required();
    compute_cmd->add_option("--n", compute_args.n, "degree for apery/delannoy");
    compute_cmd->add_option("--k", compute_args.k, "degree for q-apery");
    compute_cmd->add_option("--alpha", compute_args.alpha, "exponent alpha (default 1)");
    compute_cmd->add_option("--d", compute_args.d, "cyclotomic index");
    compute_cmd->add_option("--limit", compute_args.limit, "eta expansion limit");

    VerifyArgs resume_args;
    CLI::App* resume_cmd = app.add_subcommand("resume", "continue an interrupted sweep");
    resume_cmd->set_help_flag("--help", "print help");
    resume_cmd->add_option("--out", resume_args.out, "existing JSON-lines file")->required();
    resume_cmd->add_option("--theorem", resume_args.theorem,
                           "cross-check: theorem the file must have been written for");
    add_range_options(resume_cmd, resume_args);
    resume_cmd->add_option("--sign", resume_args.sign, "cross-check sign");
    resume_cmd->add_option("--workers", resume_args.workers, "parallel verification workers");
    resume_cmd->add_flag("--deterministic", resume_args.deterministic, "cross-check flag");
    resume_cmd->add_flag("--emit-quotients", resume_args.emit_quotients, "cross-check flag");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return qapery::kExitUsage;
    }

    try {
        if (verify_cmd->parsed()) {
            std::string error;
            auto spec = build_spec(verify_args, error);
            if (!spec) {
                std::cerr << error << '\n';
                return qapery::kExitUsage;
            }
            qapery::VerifyContext ctx;
            return qapery::run_sweep(*spec, ctx);
        }
        if (compute_cmd->parsed()) return run_compute(compute_args);
        if (resume_cmd->parsed()) {
            std::optional<qapery::SweepSpec> expected;
            if (!resume_args.theorem.empty()) {
                std::string error;
                auto spec = build_spec(resume_args, error);
                if (!spec) {
                    std::cerr << error << '\n';
                    return qapery::kExitUsage;
                }
                expected = *spec;
            }
            qapery::VerifyContext ctx;
            return qapery::resume_sweep(resume_args.out, ctx, expected,
                                        std::max(1, resume_args.workers));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return qapery::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return qapery::kExitIo;
    }
    return qapery::kExitUsage;
}
