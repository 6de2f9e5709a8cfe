#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "marisim/metrics.hpp"
#include "marisim/rng.hpp"

using namespace marisim;

namespace {
// Wife-count fragments from the published table, generations 1 and 2.
const std::vector<int> kFragmentGen1 = {14, 0, 1, 1, 0, 0, 1, 4, 1, 1, 0, 1, 0, 0, 0,
                                        1,  1, 0, 0, 1, 0, 0, 1, 1, 5, 0, 0, 0, 0, 0};
const std::vector<int> kFragmentGen2 = {1, 1, 1, 1, 1, 2, 1, 0, 1, 1, 1, 1, 1, 1,
                                        0, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1};

// Integer sum of squares, then one division.
double variance_oracle(const std::vector<int>& q) {
    long long ss = 0;
    for (int v : q) ss += static_cast<long long>(v - 1) * (v - 1);
    return static_cast<double>(ss) / static_cast<double>(q.size() - 1);
}

// Raw-moment formula in extended precision.
double gap_oracle(const std::vector<double>& w) {
    long double s = 0, s2 = 0;
    for (double v : w) {
        s += v;
        s2 += static_cast<long double>(v) * v;
    }
    const long double n = w.size();
    const long double var = (s2 - s * s / n) / (n - 1);
    return static_cast<double>(std::sqrt(var) / (s / n));
}
}  // namespace

TEST(PolygynyVariance, TableFragments) {
    ASSERT_EQ(kFragmentGen1.size(), 30u);
    ASSERT_EQ(kFragmentGen2.size(), 28u);
    EXPECT_NEAR(polygyny_variance(kFragmentGen1), 210.0 / 29.0, 1e-9);
    EXPECT_NEAR(polygyny_variance(kFragmentGen2), 6.0 / 27.0, 1e-9);
}

TEST(PolygynyVariance, ZeroIffAllOnes) {
    EXPECT_EQ(polygyny_variance(std::vector<int>(10, 1)), 0.0);
    EXPECT_GT(polygyny_variance(std::vector<int>{1, 1, 2}), 0.0);
    EXPECT_GT(polygyny_variance(std::vector<int>{1, 0}), 0.0);
    // measured from 1, not from the sample mean
    EXPECT_EQ(polygyny_variance(std::vector<int>{2, 2, 2}), 1.5);
}

TEST(PolygynyVariance, NeedsTwoMen) {
    EXPECT_THROW(polygyny_variance(std::vector<int>{1}), SimError);
    EXPECT_THROW(polygyny_variance(std::vector<int>{}), SimError);
}

TEST(WealthGap, Examples) {
    EXPECT_EQ(wealth_gap_ratio(std::vector<double>{7, 7, 7, 7}), 0.0);
    EXPECT_NEAR(wealth_gap_ratio(std::vector<double>{0, 200}), std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(wealth_gap_ratio(std::vector<double>{50, 100, 150}), 0.5, 1e-12);
    EXPECT_THROW(wealth_gap_ratio(std::vector<double>{-1, 1}), SimError);
    EXPECT_THROW(wealth_gap_ratio(std::vector<double>{5}), SimError);
}

TEST(Metrics, MatchBruteForceOnRandomInputs) {
    RngStream rng(123);
    for (int t = 0; t < 1000; ++t) {
        const auto n = 2 + rng.uniform_int(200);
        std::vector<int> q;
        std::vector<double> w;
        for (std::uint64_t i = 0; i < n; ++i) {
            q.push_back(static_cast<int>(rng.uniform_int(6)));
            w.push_back(rng.gaussian(100.0, 30.0));
        }
        ASSERT_NEAR(polygyny_variance(q), variance_oracle(q), 1e-12 * std::max(1.0, variance_oracle(q)));
        const double g = gap_oracle(w);
        ASSERT_NEAR(wealth_gap_ratio(w), g, 1e-9 * std::max(1.0, std::abs(g)));
    }
}

TEST(Metrics, PermutationAndScaleInvariance) {
    RngStream rng(321);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> q;
        std::vector<double> w;
        for (int i = 0; i < 50; ++i) {
            q.push_back(static_cast<int>(rng.uniform_int(4)));
            w.push_back(rng.gaussian(500.0, 200.0));
        }
        const double v = polygyny_variance(q);
        const double g = wealth_gap_ratio(w);
        std::reverse(q.begin(), q.end());
        std::rotate(q.begin(), q.begin() + 17, q.end());
        EXPECT_EQ(polygyny_variance(q), v);
        const double c = 0.001 + 1000.0 * rng.uniform();
        for (auto& x : w) x *= c;
        EXPECT_NEAR(wealth_gap_ratio(w), g, 1e-9 * std::abs(g));
    }
}

TEST(MeasureGeneration, UndefinedForSingleMan) {
    GenerationState s;
    s.men = {{10, 1, 2, 0}};
    s.total_wealth = 10;
    s.women_count = 2;
    const auto m = measure_generation(s, 0);
    EXPECT_TRUE(std::isnan(m.polygyny_variance));
    EXPECT_TRUE(std::isnan(m.wealth_gap_ratio));
    EXPECT_EQ(m.men_count, 1);
}

namespace {
GenerationMetrics row(int gen, double var, double gap) { return {gen, var, gap, 0, 0, 0}; }
}  // namespace

TEST(AggregateRuns, SingleRunIsIdentity) {
    const std::vector<std::vector<GenerationMetrics>> one = {{row(1, 3.0, 0.7), row(2, 0.5, 0.2)}};
    const auto agg = aggregate_runs(one);
    ASSERT_EQ(agg.size(), 2u);
    EXPECT_EQ(agg[0].polygyny_variance.mean, 3.0);
    EXPECT_EQ(agg[0].polygyny_variance.median, 3.0);
    EXPECT_EQ(agg[0].polygyny_variance.q25, 3.0);
    EXPECT_EQ(agg[1].wealth_gap_ratio.median, 0.2);
    EXPECT_EQ(agg[1].runs, 1u);
}

TEST(AggregateRuns, TwoPointStatsAndRaggedRuns) {
    const std::vector<std::vector<GenerationMetrics>> runs = {
        {row(1, 5, 1), row(2, 1, 1), row(3, 0, 1)},
        {row(1, 7, 1), row(2, 1, 1), row(3, 2, 1), row(4, 9, 1)},
        {row(1, 6, std::nan(""))},
    };
    const auto agg = aggregate_runs(runs);
    ASSERT_EQ(agg.size(), 4u);
    EXPECT_EQ(agg[2].generation, 3);
    EXPECT_EQ(agg[2].polygyny_variance.mean, 1.0);
    EXPECT_EQ(agg[2].polygyny_variance.median, 1.0);
    EXPECT_EQ(agg[3].runs, 1u);
    EXPECT_EQ(agg[0].runs, 3u);
    EXPECT_EQ(agg[0].polygyny_variance.median, 6.0);
    EXPECT_EQ(agg[0].wealth_gap_ratio.n, 2u);  // NaN cell excluded
}

TEST(Quantile, LinearInterpolation) {
    const std::vector<double> v = {1, 2, 3, 4};
    EXPECT_EQ(sorted_quantile(v, 0.0), 1.0);
    EXPECT_EQ(sorted_quantile(v, 1.0), 4.0);
    EXPECT_EQ(sorted_quantile(v, 0.5), 2.5);
    EXPECT_EQ(sorted_quantile(v, 0.25), 1.75);
}
