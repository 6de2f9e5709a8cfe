#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "config.hpp"
#include "population.hpp"
#include "rng.hpp"

namespace marisim {

struct MarriageCurveParams {
    double lambda = 24.0;
    double mu = 30.0;
};

/// Expected number of wives for a man whose wealth is `x` times the mean:
///   lambda*tanh(x/mu) - lambda*tanh(1/mu) + 1.
/// Equals 1 at x = 1 and saturates at lambda*(1 - tanh(1/mu)) + 1.
inline double expected_wives(double x, const MarriageCurveParams& p) noexcept {
    return p.lambda * std::tanh(x / p.mu) - p.lambda * std::tanh(1.0 / p.mu) + 1.0;
}

inline double expected_wives_limit(const MarriageCurveParams& p) noexcept {
    return p.lambda * (1.0 - std::tanh(1.0 / p.mu)) + 1.0;
}

/// round(expected * g), g ~ N(1, noise_std), half away from zero.  May be
/// negative; callers clamp.
inline std::int64_t sample_wife_count(double expected, double noise_std, RngStream& rng) noexcept {
    const double g = rng.gaussian(1.0, noise_std);
    const double v = std::round(expected * g);
    constexpr double bound = 1e15;
    return static_cast<std::int64_t>(std::clamp(v, -bound, bound));
}

struct MatchOutcome {
    std::vector<int> assignments;  // wife count per man, same order as state.men
    std::int64_t unmarried_women = 0;
    std::int64_t unmarried_men = 0;
};

/// Draws unmarried men uniformly at random without replacement until the
/// women or the men run out.  Every drawn man leaves the pool whether he
/// marries or not, so the loop runs at most N times.
///
/// Polygyny: the drawn man gets sample_wife_count(expected_wives(ratio)),
/// clamped to [0, women remaining].  Monogamy: exactly one wife, no noise
/// draw.  Ratios must already be computed in polygyny mode.
inline MatchOutcome match_generation(const GenerationState& state, MarriageMode mode,
                                     const MarriageCurveParams& params, double noise_std,
                                     RngStream& rng) {
    MatchOutcome out;
    out.assignments.assign(state.men.size(), 0);
    std::vector<std::size_t> pool(state.men.size());
    std::iota(pool.begin(), pool.end(), std::size_t{0});

    std::int64_t women = state.women_count;
    while (women > 0 && !pool.empty()) {
        const auto pick = static_cast<std::size_t>(rng.uniform_int(pool.size()));
        const std::size_t man = pool[pick];
        pool[pick] = pool.back();
        pool.pop_back();

        std::int64_t wives = 1;
        if (mode == MarriageMode::polygyny) {
            const double expected = expected_wives(state.men[man].wealth_ratio, params);
            wives = std::clamp<std::int64_t>(sample_wife_count(expected, noise_std, rng), 0, women);
        }
        out.assignments[man] = static_cast<int>(wives);
        women -= wives;
    }
    out.unmarried_women = women;
    out.unmarried_men = std::count(out.assignments.begin(), out.assignments.end(), 0);
    return out;
}

inline void apply_matching(GenerationState& state, const MatchOutcome& outcome) {
    for (std::size_t i = 0; i < state.men.size(); ++i) state.men[i].wife_count = outcome.assignments[i];
}

}  // namespace marisim
