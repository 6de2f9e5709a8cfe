#pragma once

// Generation loop and batch drivers.
//
// Random streams: each run of seed s uses two independent streams,
//   init     = RngStream(derive_seed(s, 0))       first-generation wealth
//   dynamics = RngStream(derive_seed(s, 1 + mode)) matching, births, savings
// so the two modes of the same seed share their initial population exactly
// and draw everything after it from separate streams.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "config.hpp"
#include "demography.hpp"
#include "error.hpp"
#include "marriage.hpp"
#include "metrics.hpp"
#include "population.hpp"
#include "rng.hpp"

namespace marisim {

enum class RunStatus { completed, extinct, cap_breach, degenerate_economy };

inline std::string_view to_string(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::extinct: return "extinct";
        case RunStatus::cap_breach: return "cap-breach";
        case RunStatus::degenerate_economy: return "degenerate-economy";
    }
    return "unknown";
}

/// completed and extinct are normal outcomes; the other two are aborts.
inline bool is_abort(RunStatus s) { return s == RunStatus::cap_breach || s == RunStatus::degenerate_economy; }

struct RunReport {
    SimConfig config;
    std::vector<GenerationMetrics> rows;  // consecutive generations from 1
    RunStatus status = RunStatus::completed;
    int final_generation = 0;  // generation at which the run stopped
    std::string message;
};

inline RngStream init_stream(std::uint64_t seed) { return RngStream(derive_seed(seed, 0)); }

inline RngStream dynamics_stream(std::uint64_t seed, MarriageMode mode) {
    return RngStream(derive_seed(seed, mode == MarriageMode::polygyny ? 1 : 2));
}

/// Runs ratios -> matching -> metrics -> reproduction/inheritance for each
/// generation until total_generations rows exist or the run terminates.
/// Abort conditions are reported through the status, never thrown.
inline RunReport run_simulation(const SimConfig& config) {
    validate(config);
    RunReport report;
    report.config = config;

    auto init_rng = init_stream(config.seed);
    auto rng = dynamics_stream(config.seed, config.mode);
    const MarriageCurveParams curve{config.lambda, config.mu};

    GenerationState state = init_generation(config, init_rng);
    for (;;) {
        report.final_generation = state.index;
        try {
            compute_wealth_ratios(state);
        } catch (const SimError& e) {
            report.status = RunStatus::degenerate_economy;
            report.message = e.what();
            return report;
        }
        const auto outcome = match_generation(state, config.mode, curve, config.marriage_noise_std, rng);
        apply_matching(state, outcome);
        report.rows.push_back(measure_generation(state, outcome.unmarried_women));
        if (state.index >= config.total_generations) {
            report.status = RunStatus::completed;
            return report;
        }

        GenerationState next;
        try {
            next = advance_generation(state, outcome, config, rng);
        } catch (const SimError& e) {
            report.status = RunStatus::cap_breach;
            report.final_generation = state.index + 1;
            report.message = e.what();
            return report;
        }
        if (next.extinct()) {
            report.status = RunStatus::extinct;
            report.final_generation = next.index;
            report.message = "extinct at generation " + std::to_string(next.index) + " (" +
                             std::to_string(next.men_count()) + " men, " +
                             std::to_string(next.women_count) + " women)";
            return report;
        }
        state = std::move(next);
    }
}

/// Calls fn(i) for i in [0, count) on up to `jobs` threads.  fn must only
/// write to slot i of its output.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
}

/// One run per seed, results in seed order regardless of `jobs`.
inline std::vector<RunReport> run_sweep(const SimConfig& base, const std::vector<std::uint64_t>& seeds,
                                        unsigned jobs) {
    validate(base);
    std::vector<RunReport> reports(seeds.size());
    parallel_for(seeds.size(), jobs, [&](std::size_t i) {
        SimConfig c = base;
        c.seed = seeds[i];
        reports[i] = run_simulation(c);
    });
    return reports;
}

struct PairedRun {
    std::uint64_t seed = 0;
    RunReport polygyny;
    RunReport monogamy;
};

/// Both marriage modes for each seed, sharing the first generation.
inline std::vector<PairedRun> run_compare(const SimConfig& base, const std::vector<std::uint64_t>& seeds,
                                          unsigned jobs) {
    validate(base);
    std::vector<PairedRun> pairs(seeds.size());
    parallel_for(seeds.size(), jobs, [&](std::size_t i) {
        SimConfig c = base;
        c.seed = seeds[i];
        pairs[i].seed = seeds[i];
        c.mode = MarriageMode::polygyny;
        pairs[i].polygyny = run_simulation(c);
        c.mode = MarriageMode::monogamy;
        pairs[i].monogamy = run_simulation(c);
    });
    return pairs;
}

inline std::vector<std::vector<GenerationMetrics>> metric_series(const std::vector<RunReport>& reports) {
    std::vector<std::vector<GenerationMetrics>> out;
    out.reserve(reports.size());
    for (const auto& r : reports) out.push_back(r.rows);
    return out;
}

}  // namespace marisim
