#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace marisim {

struct ManRecord {
    double wealth = 0.0;
    double wealth_ratio = 0.0;  // wealth / generation mean
    int wife_count = 0;
    int son_count = 0;

    bool operator==(const ManRecord&) const = default;
};

struct GenerationState {
    int index = 1;
    std::vector<ManRecord> men;
    std::int64_t women_count = 0;
    double total_wealth = 0.0;

    std::int64_t men_count() const noexcept { return static_cast<std::int64_t>(men.size()); }
    double mean_wealth() const noexcept { return men.empty() ? 0.0 : total_wealth / men.size(); }
    bool extinct() const noexcept { return men.empty() || women_count == 0; }
};

inline double sum_wealth(const std::vector<ManRecord>& men) {
    return std::accumulate(men.begin(), men.end(), 0.0,
                           [](double acc, const ManRecord& m) { return acc + m.wealth; });
}

/// First generation: Gaussian base wealth, plus an elite bonus drawn
/// independently for each man with probability `elite_fraction`.
/// Negative wealth is kept as drawn.
inline GenerationState init_generation(const SimConfig& config, RngStream& rng) {
    GenerationState state;
    state.index = 1;
    state.women_count = config.initial_women;
    state.men.resize(static_cast<std::size_t>(config.initial_men));
    for (auto& man : state.men) {
        man.wealth = rng.gaussian(config.initial_wealth_mean, config.initial_wealth_std);
        if (rng.uniform() < config.elite_fraction)
            man.wealth += rng.gaussian(config.elite_bonus_mean, config.elite_bonus_std);
    }
    state.total_wealth = sum_wealth(state.men);
    return state;
}

/// Fills wealth_ratio = wealth * N / total_wealth.  Throws
/// SimError(degenerate_economy) when the total is not positive.
inline void compute_wealth_ratios(GenerationState& state) {
    if (state.men.empty())
        throw SimError(ErrorKind::degenerate_economy, "no men to compute wealth ratios for");
    if (!(state.total_wealth > 0.0))
        throw SimError(ErrorKind::degenerate_economy,
                       "total wealth " + std::to_string(state.total_wealth) + " <= 0 in generation " +
                           std::to_string(state.index));
    const double n = static_cast<double>(state.men.size());
    for (auto& man : state.men) man.wealth_ratio = man.wealth * n / state.total_wealth;
}

}  // namespace marisim
