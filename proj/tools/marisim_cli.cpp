// marisim: command-line front end for the generational marriage model and
// the closed-form infection birth-rate curves.
//
// Exit codes: 0 ok, 1 usage, 2 config error, 3 runtime abort.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "marisim/config.hpp"
#include "marisim/csv.hpp"
#include "marisim/simulation.hpp"
#include "marisim/std_model.hpp"

namespace {

using namespace marisim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAbort = 3;

struct ModelOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
    std::optional<int> generations;
    std::vector<std::string> overrides;  // key=value

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "key = value config file");
        app->add_option("--seed", seed, "master seed");
        app->add_option("--mode", mode, "polygyny | monogamy")
            ->check(CLI::IsMember({"polygyny", "monogamy"}));
        app->add_option("--generations", generations, "number of generations")
            ->check(CLI::PositiveNumber);
        app->add_option("--set", overrides, "override any config field, KEY=VALUE (repeatable)");
    }

    SimConfig resolve() const {
        SimConfig c;
        if (!config_path.empty()) c = load_config(config_path, c);
        for (const auto& kv : overrides) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw SimError(ErrorKind::invalid_config, "--set expects KEY=VALUE, got '" + kv + "'");
            set_field(c, kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (seed) c.seed = *seed;
        if (mode) c.mode = parse_mode(*mode);
        if (generations) c.total_generations = *generations;
        validate(c);
        return c;
    }
};

// "A..B" inclusive, or a single seed "A".
std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
    auto bad = [&] { return SimError(ErrorKind::invalid_config, "bad seed range '" + text + "'"); };
    auto parse = [&](const std::string& s) {
        std::uint64_t v{};
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw bad();
        return v;
    };
    std::uint64_t first, last;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        first = parse(text.substr(0, dots));
        last = parse(text.substr(dots + 2));
    } else {
        first = last = parse(text);
    }
    if (last < first || last - first >= 10'000'000) throw bad();
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = first;; ++s) {
        seeds.push_back(s);
        if (s == last) break;
    }
    return seeds;
}

// Writes via `fn(ostream&)` to `path`, or stdout when path is empty or "-".
template <class Fn>
void emit(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    fn(out);
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

int cmd_run(const ModelOptions& opts, const std::string& out_path) {
    const SimConfig config = opts.resolve();
    const RunReport report = run_simulation(config);
    emit(out_path, [&](std::ostream& os) { write_run_csv(os, report); });
    std::cerr << "status: " << to_string(report.status) << " at generation " << report.final_generation;
    if (!report.message.empty()) std::cerr << " (" << report.message << ")";
    std::cerr << '\n';
    return is_abort(report.status) ? kExitAbort : kExitOk;
}

std::vector<std::uint64_t> resolve_seeds(const SimConfig& config, const std::string& range,
                                         std::optional<std::uint64_t> count) {
    if (count) {
        if (*count == 0) throw SimError(ErrorKind::invalid_config, "--count must be >= 1");
        return parse_seed_range(std::to_string(config.seed) + ".." + std::to_string(config.seed + *count - 1));
    }
    return parse_seed_range(range);
}

int cmd_compare(const ModelOptions& opts, const std::string& range, std::optional<std::uint64_t> count,
                unsigned jobs, const std::string& out_path) {
    const SimConfig config = opts.resolve();
    const auto pairs = run_compare(config, resolve_seeds(config, range, count), jobs);
    emit(out_path, [&](std::ostream& os) { write_compare_csv(os, pairs); });
    return kExitOk;
}

int cmd_sweep(const ModelOptions& opts, const std::string& range, std::optional<std::uint64_t> count,
              unsigned jobs, const std::string& out_path, std::string status_path) {
    const SimConfig config = opts.resolve();
    const auto reports = run_sweep(config, resolve_seeds(config, range, count), jobs);
    const auto summary = aggregate_runs(metric_series(reports));
    emit(out_path, [&](std::ostream& os) { write_summary_csv(os, summary); });
    if (status_path.empty() && !out_path.empty() && out_path != "-") status_path = out_path + ".status.csv";
    if (!status_path.empty()) emit(status_path, [&](std::ostream& os) { write_status_csv(os, reports); });
    std::size_t aborted = 0;
    for (const auto& r : reports) aborted += is_abort(r.status);
    if (aborted) std::cerr << aborted << " of " << reports.size() << " runs aborted, see status table\n";
    return kExitOk;
}

struct StdOptions {
    double alpha = 3.0;
    double beta = 0.04;
    std::optional<double> beta_m;
    std::vector<double> gammas{0.2, 0.4};
    double q = 8.0;
    int q_max = 8;
    int k_max = 20;
    std::string out_prefix;
};

int cmd_std(const StdOptions& o) {
    std::vector<stdm::StdParams> sets;
    for (double g : o.gammas) {
        stdm::StdParams p{o.alpha, o.beta, o.beta_m.value_or(o.beta), g, o.q};
        stdm::validate(p);
        sets.push_back(p);
    }
    const auto fig4 = stdm::curve_fig4(sets, o.q_max);
    const auto fig5 = stdm::curve_fig5(sets, o.k_max);
    if (o.out_prefix.empty()) {
        write_curve_csv(std::cout, fig4);
        std::cout << '\n';
        write_curve_csv(std::cout, fig5);
        return kExitOk;
    }
    emit(o.out_prefix + "_fig4.csv", [&](std::ostream& os) { write_curve_csv(os, fig4); });
    emit(o.out_prefix + "_fig5.csv", [&](std::ostream& os) { write_curve_csv(os, fig5); });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generational marriage-market simulator and infection birth-rate curves"};
    app.require_subcommand(1);

    ModelOptions model;
    std::string out_path;
    std::string seeds_range = "1..50";
    std::optional<std::uint64_t> seed_count;
    unsigned jobs = 1;
    std::string status_path;

    auto* run = app.add_subcommand("run", "single simulation, per-generation CSV");
    model.attach(run);
    run->add_option("--out", out_path, "output CSV (default stdout)");

    auto* compare = app.add_subcommand("compare", "paired polygyny/monogamy runs per seed");
    model.attach(compare);
    compare->add_option("--seeds", seeds_range, "inclusive seed range A..B")->capture_default_str();
    compare->add_option("--count", seed_count, "number of seeds starting at --seed (overrides --seeds)");
    compare->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    compare->add_option("--out", out_path, "output CSV (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "multi-seed runs aggregated per generation");
    model.attach(sweep);
    sweep->add_option("--seeds", seeds_range, "inclusive seed range A..B")->capture_default_str();
    sweep->add_option("--count", seed_count, "number of seeds starting at --seed (overrides --seeds)");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path, "summary CSV (default stdout)");
    sweep->add_option("--status-out", status_path, "per-seed status CSV (default OUT.status.csv)");

    StdOptions so;
    auto* stdcmd = app.add_subcommand("std", "infection birth-rate coefficient and population-ratio curves");
    stdcmd->add_option("--alpha", so.alpha, "baseline birth rate")->capture_default_str();
    stdcmd->add_option("--beta", so.beta, "wife external infection probability")->capture_default_str();
    stdcmd->add_option("--beta-m", so.beta_m, "husband external infection probability (default: beta)");
    stdcmd->add_option("--gamma", so.gammas, "sterility probability, one curve per value")
        ->capture_default_str();
    stdcmd->add_option("--q", so.q, "average wives per polygynous family")->capture_default_str();
    stdcmd->add_option("--q-max", so.q_max, "largest q in the coefficient table")->capture_default_str();
    stdcmd->add_option("--k-max", so.k_max, "largest generation in the ratio table")->capture_default_str();
    stdcmd->add_option("--out", so.out_prefix, "write PREFIX_fig4.csv and PREFIX_fig5.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*run) return cmd_run(model, out_path);
        if (*compare) return cmd_compare(model, seeds_range, seed_count, jobs, out_path);
        if (*sweep) return cmd_sweep(model, seeds_range, seed_count, jobs, out_path, status_path);
        if (*stdcmd) return cmd_std(so);
    } catch (const SimError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::invalid_config || e.kind() == ErrorKind::domain ? kExitConfig : kExitAbort;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAbort;
    }
    return kExitUsage;
}
