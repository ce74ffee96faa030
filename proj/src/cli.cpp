#include "lensfr/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lensfr/connectsum.hpp"
#include "lensfr/framing.hpp"
#include "lensfr/render.hpp"
#include "lensfr/sweep.hpp"

namespace lensfr::cli {

namespace {

struct Options {
    OutputFormat format = OutputFormat::Plain;
    std::string out_path;

    int64_t p = 0;
    int64_t q = 0;
    bool normalized = false;

    int64_t p_min = 0;
    int64_t p_max = 0;
    bool serial = false;

    int64_t max_p = 0;
    int summands = 1;

    int64_t group_order = 0;
    bool h1_nontrivial = false;
    int64_t pullback_class = 0;
};

// Writes to --out when given, otherwise to `out`.
bool emit(const Options& opts, const std::string& text, std::ostream& out, std::ostream& err) {
    if (opts.out_path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text) || !file.flush()) {
        err << "error: cannot write " << opts.out_path << '\n';
        return false;
    }
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Equivariant framing invariant of odd-order lens spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, OutputFormat> formats{
        {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
    app.add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", opts.out_path, "Write output to FILE instead of stdout");

    auto* invariant = app.add_subcommand("invariant", "Framing invariant of L(p,q), p odd");
    invariant->add_option("p", opts.p)->required();
    invariant->add_option("q", opts.q)->required();
    invariant->add_flag("--normalized", opts.normalized,
                        "Place the left-invariant framing at -1/2");

    auto* table = app.add_subcommand("table", "Invariant of every L(p,q) with p_min <= p <= p_max");
    table->add_option("p_min", opts.p_min)->required();
    table->add_option("p_max", opts.p_max)->required();
    table->add_flag("--serial", opts.serial, "Use the single-threaded reference path");

    auto* verify = app.add_subcommand("verify", "Exhaustive checks for all odd p <= max_p");
    verify->add_option("max_p", opts.max_p)->required();
    verify->add_flag("--serial", opts.serial, "Use the single-threaded reference path");

    auto* search = app.add_subcommand(
        "search", "Homotopy equivalent, non-homeomorphic connected sums of lens spaces");
    search->add_option("max_p", opts.max_p)->required();
    search->add_option("summands", opts.summands, "1 or 2")->capture_default_str();

    auto* obstruct = app.add_subcommand(
        "obstruct", "Universally tight contact structure obstruction for S^3/G");
    obstruct->add_option("group_order", opts.group_order)->required();
    obstruct->add_option("pullback_class", opts.pullback_class)->required();
    obstruct->add_flag("--h1-nontrivial", opts.h1_nontrivial, "H_1(M; Z/2) is nonzero");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto exec = opts.serial ? Execution::Serial : Execution::Parallel;
    try {
        if (invariant->parsed()) {
            const LensSpace lens(opts.p, opts.q);
            if (lens.p() % 2 == 0) {
                err << "error: p must be odd, got " << lens.p() << '\n';
                return kExitUsage;
            }
            return emit(opts, render_invariant(lens, opts.normalized, opts.format), out, err)
                       ? kExitOk
                       : kExitUsage;
        }
        if (table->parsed()) {
            if (opts.p_min < 3 || opts.p_min > opts.p_max) {
                err << "error: need 3 <= p_min <= p_max\n";
                return kExitUsage;
            }
            const auto rows = framing_table(opts.p_min, opts.p_max, exec);
            return emit(opts, render_table(rows, opts.format), out, err) ? kExitOk : kExitUsage;
        }
        if (verify->parsed()) {
            if (opts.max_p < 3) {
                err << "error: max_p must be >= 3\n";
                return kExitUsage;
            }
            const auto report = verify_range(opts.max_p, exec);
            if (!emit(opts, render_verification(report, opts.max_p, opts.format), out, err)) {
                return kExitUsage;
            }
            return report.passed() ? kExitOk : kExitVerificationFailed;
        }
        if (search->parsed()) {
            const auto pairs = find_exotic_pairs(opts.max_p, opts.summands);
            return emit(opts, render_search(pairs, opts.max_p, opts.summands, opts.format), out,
                        err)
                       ? kExitOk
                       : kExitUsage;
        }
        if (obstruct->parsed()) {
            const QuotientData data(opts.group_order, !opts.h1_nontrivial, opts.pullback_class);
            return emit(opts, render_obstruction(data, opts.format), out, err) ? kExitOk
                                                                               : kExitUsage;
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lensfr::cli
