#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "lebound/bounds.hpp"
#include "lebound/errors.hpp"
#include "lebound/gkf.hpp"
#include "lebound/io.hpp"
#include "lebound/linext.hpp"
#include "lebound/verify.hpp"

namespace {

using lebound::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;    // bad input or configuration
constexpr int kExitViolated = 2; // a verified claim actually failed

struct CommonOpts {
    std::string input; // empty = standard input
    std::string format = "auto";
    bool pretty = false;
};

lebound::PosetFormat to_format(const std::string& name) {
    if (name == "json") return lebound::PosetFormat::json;
    if (name == "text") return lebound::PosetFormat::text;
    if (name == "auto") return lebound::PosetFormat::auto_detect;
    throw lebound::ParseError("unknown format '" + name + "' (expected json|text)");
}

lebound::Poset read_poset(const CommonOpts& opts) {
    if (opts.input.empty()) return lebound::load_poset(std::cin, to_format(opts.format));
    std::ifstream in(opts.input);
    if (!in) throw lebound::ParseError("cannot open input file '" + opts.input + "'");
    return lebound::load_poset(in, to_format(opts.format));
}

void emit(const Json& doc, bool pretty) {
    std::cout << (pretty ? doc.dump(2) : doc.dump()) << "\n";
}

// "8" or "6..12"
void parse_n_range(const std::string& text, int& lo, int& hi) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw lebound::ContractError("bad --n value '" + text + "' (expected N or A..B)");
    }
}

int cmd_analyze(const CommonOpts& opts) {
    const lebound::Poset p = read_poset(opts);
    const lebound::BoundsReport report = lebound::check_bounds(p);
    emit(lebound::bounds_report_to_json(report), opts.pretty);
    return report.holds ? kExitOk : kExitViolated;
}

int cmd_count(const CommonOpts& opts) {
    const lebound::Poset p = read_poset(opts);
    Json doc;
    doc["n"] = p.size();
    doc["e"] = lebound::count_extensions(p).str();
    emit(doc, opts.pretty);
    return kExitOk;
}

int cmd_gkf(const CommonOpts& opts) {
    const lebound::Poset p = read_poset(opts);
    Json doc;
    doc["a"] = lebound::antichain_params(p).parts();
    doc["c"] = lebound::chain_params(p).parts();
    const std::vector<int> ordering = lebound::order_maximal_antichain(p);
    doc["ordering"] = ordering;
    doc["ordering_verified"] = lebound::verify_ordering(p, ordering);
    emit(doc, opts.pretty);
    return kExitOk;
}

int cmd_verify(const lebound::VerifyConfig& config, bool pretty) {
    const auto start = std::chrono::steady_clock::now();
    const lebound::VerifySummary summary = lebound::run_verify(config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    emit(lebound::verify_summary_to_json(config, summary), pretty);
    // Timing stays off stdout so identical configs stay byte-identical.
    std::fprintf(stderr, "verify: %lld instances, %lld failures, %.2fs\n", summary.instances,
                 summary.failures_total, elapsed);
    return summary.failures_total == 0 ? kExitOk : kExitViolated;
}

int cmd_ratio_scan(int n_lo, int n_hi, int samples, double density, std::uint64_t seed) {
    if (n_lo < 1 || n_lo > n_hi) throw lebound::ContractError("ratio-scan: need 1 <= A <= B");
    if (samples < 1) throw lebound::ContractError("ratio-scan: need at least one sample");
    if (density < 0.0 || density > 1.0)
        throw lebound::ContractError("ratio-scan: density must lie in [0,1]");

    std::cout << "n,log_lower,log_e,log_upper,log_ratio\n";
    std::uint64_t row = 0;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int sample = 0; sample < samples; ++sample, ++row) {
            const lebound::Poset p = lebound::random_poset(n, density, seed + row);
            const lebound::Partition c = lebound::chain_params(p);
            const lebound::Partition a = lebound::conjugate(c);
            double log_lower = 0.0;
            for (int part : a.parts()) log_lower += std::lgamma(part + 1.0);
            double log_upper = std::lgamma(n + 1.0);
            for (int part : c.parts()) log_upper -= std::lgamma(part + 1.0);

            std::string log_e;
            if (n <= 24) log_e = lebound::format_12sig(lebound::log_big(lebound::count_extensions(p)));

            std::cout << n << ',' << lebound::format_12sig(log_lower) << ',' << log_e << ','
                      << lebound::format_12sig(log_upper) << ','
                      << lebound::format_12sig(log_upper - log_lower) << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear-extension bounds from chain and antichain covers"};
    app.require_subcommand(1);

    CommonOpts common;
    const auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--input", common.input, "Poset file (defaults to standard input)");
        if (with_format)
            cmd->add_option("--format", common.format, "Input format: json|text (default: auto)");
        cmd->add_flag("--pretty", common.pretty, "Indent JSON output");
    };

    auto* analyze = app.add_subcommand("analyze", "Exact extension count and both bounds");
    add_common(analyze);

    auto* count = app.add_subcommand("count", "Exact linear-extension count");
    add_common(count);

    auto* gkf = app.add_subcommand("gkf", "Cover parameters and maximal-antichain ordering");
    add_common(gkf);

    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    std::string mode = "exhaustive";
    std::string n_spec = "1..5";
    int count_opt = 0;
    double density = 0.3;
    std::uint64_t seed = 0;
    std::string checks_spec = "all";
    verify->add_option("--mode", mode, "exhaustive|random (default: exhaustive)");
    verify->add_option("--n", n_spec, "Element count N or range A..B");
    verify->add_option("--count", count_opt, "Random mode: number of instances");
    verify->add_option("--density", density, "Random mode: edge probability (default 0.3)");
    auto* seed_opt = verify->add_option("--seed", seed, "Random mode: base seed");
    verify->add_option("--checks", checks_spec,
                       "Comma list of bounds,gkf-oracle,injection,lemma,majorize,accuracy");
    verify->add_flag("--pretty", common.pretty, "Indent JSON output");

    auto* scan = app.add_subcommand("ratio-scan", "CSV of bound gaps over random posets");
    std::string scan_n = "4..12";
    int scan_samples = 10;
    double scan_density = 0.3;
    std::uint64_t scan_seed = 0;
    scan->add_option("--n", scan_n, "Element count range A..B");
    scan->add_option("--count", scan_samples, "Samples per n (default 10)");
    scan->add_option("--density", scan_density, "Edge probability (default 0.3)");
    scan->add_option("--seed", scan_seed, "Base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(common);
        if (count->parsed()) return cmd_count(common);
        if (gkf->parsed()) return cmd_gkf(common);
        if (verify->parsed()) {
            lebound::VerifyConfig config;
            config.mode = [&] {
                if (mode == "exhaustive") return lebound::VerifyConfig::Mode::exhaustive;
                if (mode == "random") return lebound::VerifyConfig::Mode::random;
                throw lebound::ContractError("unknown mode '" + mode + "'");
            }();
            parse_n_range(n_spec, config.n_min, config.n_max);
            config.count = count_opt;
            config.density = density;
            config.seed = seed;
            config.seed_set = seed_opt->count() > 0;
            if (checks_spec != "all") {
                std::string rest = checks_spec;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    config.checks.push_back(
                        lebound::check_from_name(rest.substr(0, comma)));
                    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
                }
            }
            return cmd_verify(config, common.pretty);
        }
        if (scan->parsed()) {
            int lo = 0;
            int hi = 0;
            parse_n_range(scan_n, lo, hi);
            return cmd_ratio_scan(lo, hi, scan_samples, scan_density, scan_seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
