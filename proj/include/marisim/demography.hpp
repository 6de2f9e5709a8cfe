#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "error.hpp"
#include "marriage.hpp"
#include "population.hpp"
#include "rng.hpp"

namespace marisim {

struct Family {
    std::size_t father_index = 0;
    int wife_count = 1;
    int children_boys = 0;
    int children_girls = 0;
};

/// One fertility draw for the whole family:
///   children = max(0, round(wives * fertility * g)), g ~ N(1, noise_std),
/// then a fair coin per child for its sex.
inline Family reproduce(Family family, double average_fertility, double fertility_noise_std,
                        RngStream& rng) {
    const double g = rng.gaussian(1.0, fertility_noise_std);
    const double raw = std::round(family.wife_count * average_fertility * g);
    const auto children = static_cast<std::int64_t>(std::clamp(raw, 0.0, 1e9));
    family.children_boys = 0;
    family.children_girls = 0;
    for (std::int64_t c = 0; c < children; ++c) {
        if (rng.coin())
            ++family.children_boys;
        else
            ++family.children_girls;
    }
    return family;
}

/// Even split of the father's wealth plus each son's own savings.
/// No sons: empty result, the wealth leaves the economy.
inline std::vector<double> inherit(double father_wealth, int son_count, double savings_mean,
                                   double savings_std, RngStream& rng) {
    std::vector<double> shares;
    if (son_count <= 0) return shares;
    shares.reserve(static_cast<std::size_t>(son_count));
    const double share = father_wealth / son_count;
    for (int s = 0; s < son_count; ++s) shares.push_back(share + rng.gaussian(savings_mean, savings_std));
    return shares;
}

// Bookkeeping for the wealth-conservation check.
struct WealthFlow {
    double bequeathed = 0.0;  // total wealth of fathers with >= 1 son
    double savings = 0.0;     // sum of all savings draws
    double vanished = 0.0;    // wealth of men with no sons
};

/// Reproduction and inheritance for every married man in index order.  The
/// returned generation holds all sons (fathers' order, then birth order)
/// and the count of daughters.  Sets son_count on `state`.  Throws
/// SimError(population_cap) when either sex exceeds the cap; an extinct
/// result (no men or no women) is returned normally.
inline GenerationState advance_generation(GenerationState& state, const MatchOutcome& outcome,
                                          const SimConfig& config, RngStream& rng,
                                          WealthFlow* flow = nullptr) {
    apply_matching(state, outcome);
    GenerationState next;
    next.index = state.index + 1;
    WealthFlow local;
    std::int64_t girls = 0;
    for (std::size_t i = 0; i < state.men.size(); ++i) {
        auto& father = state.men[i];
        father.son_count = 0;
        if (father.wife_count <= 0) {
            local.vanished += father.wealth;
            continue;
        }
        auto family = reproduce(Family{i, father.wife_count, 0, 0}, config.average_fertility,
                                config.fertility_noise_std, rng);
        father.son_count = family.children_boys;
        girls += family.children_girls;
        if (static_cast<std::int64_t>(next.men.size()) + family.children_boys > config.population_cap ||
            girls > config.population_cap)
            throw SimError(ErrorKind::population_cap,
                           "generation " + std::to_string(next.index) + " exceeds population cap " +
                               std::to_string(config.population_cap));
        if (family.children_boys == 0) {
            local.vanished += father.wealth;
            continue;
        }
        const double share = father.wealth / family.children_boys;
        for (double w : inherit(father.wealth, family.children_boys, config.savings_mean,
                                config.savings_std, rng)) {
            local.savings += w - share;
            next.men.push_back(ManRecord{w, 0.0, 0, 0});
        }
        local.bequeathed += father.wealth;
    }
    next.women_count = girls;
    next.total_wealth = sum_wealth(next.men);
    if (flow) *flow = local;
    return next;
}

}  // namespace marisim
