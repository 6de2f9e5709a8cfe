#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "error.hpp"
#include "population.hpp"

namespace marisim {

/// Polygyny intensity: sum (q_i - 1)^2 / (N - 1).  Deviations are taken
/// from the constant 1, not the sample mean, so unmarried men count.
inline double polygyny_variance(std::span<const int> wife_counts) {
    if (wife_counts.size() < 2)
        throw SimError(ErrorKind::undefined_metric, "polygyny variance needs at least 2 men");
    double sum = 0.0;
    for (int q : wife_counts) {
        const double d = static_cast<double>(q) - 1.0;
        sum += d * d;
    }
    return sum / static_cast<double>(wife_counts.size() - 1);
}

/// Wealth gap: sample standard deviation over mean.
inline double wealth_gap_ratio(std::span<const double> wealths) {
    if (wealths.size() < 2)
        throw SimError(ErrorKind::undefined_metric, "wealth gap needs at least 2 men");
    double total = 0.0;
    for (double w : wealths) total += w;
    const double mean = total / static_cast<double>(wealths.size());
    if (mean == 0.0) throw SimError(ErrorKind::undefined_metric, "wealth gap undefined at zero mean");
    double ss = 0.0;
    for (double w : wealths) ss += (w - mean) * (w - mean);
    return std::sqrt(ss / static_cast<double>(wealths.size() - 1)) / mean;
}

struct GenerationMetrics {
    int generation = 0;
    double polygyny_variance = 0.0;  // NaN when fewer than 2 men
    double wealth_gap_ratio = 0.0;   // NaN when fewer than 2 men
    std::int64_t men_count = 0;
    std::int64_t women_count = 0;
    std::int64_t unmarried_women = 0;
};

/// Metrics of a matched generation (wife counts set, before reproduction).
inline GenerationMetrics measure_generation(const GenerationState& state, std::int64_t unmarried_women) {
    GenerationMetrics m;
    m.generation = state.index;
    m.men_count = state.men_count();
    m.women_count = state.women_count;
    m.unmarried_women = unmarried_women;
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    if (state.men.size() < 2) {
        m.polygyny_variance = nan;
        m.wealth_gap_ratio = nan;
        return m;
    }
    std::vector<int> wives;
    std::vector<double> wealth;
    wives.reserve(state.men.size());
    wealth.reserve(state.men.size());
    for (const auto& man : state.men) {
        wives.push_back(man.wife_count);
        wealth.push_back(man.wealth);
    }
    m.polygyny_variance = polygyny_variance(wives);
    m.wealth_gap_ratio = state.total_wealth == 0.0 ? nan : wealth_gap_ratio(wealth);
    return m;
}

// ---------------------------------------------------------------------------
// Cross-seed aggregation

/// Linear-interpolation quantile (type 7) of an ascending-sorted sample.
inline double sorted_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
    const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

struct SummaryStats {
    std::size_t n = 0;
    double mean = std::numeric_limits<double>::quiet_NaN();
    double median = std::numeric_limits<double>::quiet_NaN();
    double q25 = std::numeric_limits<double>::quiet_NaN();
    double q75 = std::numeric_limits<double>::quiet_NaN();
};

/// Summary of the finite values in `values`; NaN entries are skipped.
inline SummaryStats summarize(std::vector<double> values) {
    std::erase_if(values, [](double v) { return !std::isfinite(v); });
    SummaryStats s;
    s.n = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    double total = 0.0;
    for (double v : values) total += v;
    s.mean = total / static_cast<double>(values.size());
    s.median = sorted_quantile(values, 0.5);
    s.q25 = sorted_quantile(values, 0.25);
    s.q75 = sorted_quantile(values, 0.75);
    return s;
}

struct GenerationSummary {
    int generation = 0;
    std::size_t runs = 0;  // runs that reached this generation
    SummaryStats polygyny_variance;
    SummaryStats wealth_gap_ratio;
};

/// Aligns runs by generation index.  Runs may have different lengths; a run
/// contributes only to generations it reached, and undefined (NaN) cells
/// are excluded per metric.  Values are visited in the order given, so the
/// result depends only on the input order, never on how runs were produced.
inline std::vector<GenerationSummary> aggregate_runs(
    const std::vector<std::vector<GenerationMetrics>>& series) {
    std::map<int, std::pair<std::vector<double>, std::vector<double>>> cells;
    for (const auto& run : series)
        for (const auto& row : run) {
            auto& [var, gap] = cells[row.generation];
            var.push_back(row.polygyny_variance);
            gap.push_back(row.wealth_gap_ratio);
        }
    std::vector<GenerationSummary> out;
    out.reserve(cells.size());
    for (auto& [gen, cols] : cells) {
        GenerationSummary s;
        s.generation = gen;
        s.runs = cols.first.size();
        s.polygyny_variance = summarize(std::move(cols.first));
        s.wealth_gap_ratio = summarize(std::move(cols.second));
        out.push_back(s);
    }
    return out;
}

}  // namespace marisim
