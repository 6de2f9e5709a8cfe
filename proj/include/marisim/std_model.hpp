#pragma once

// Closed-form birth-rate model under sexually transmitted infection.
// Coefficients are returned without the baseline birth rate alpha; callers
// scale by alpha where they need a rate.

#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "format.hpp"

namespace marisim::stdm {

struct StdParams {
    double alpha = 3.0;    // baseline children per woman
    double beta = 0.04;    // wife's external infection probability
    double beta_m = 0.04;  // husband's external infection probability
    double gamma = 0.2;    // sterility probability once infected
    double q = 8.0;        // average wives per family (real-valued)
};

inline void validate(const StdParams& p) {
    auto prob = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) throw SimError(ErrorKind::domain, "alpha must be > 0");
    if (!prob(p.beta)) throw SimError(ErrorKind::domain, "beta must be in [0,1]");
    if (!prob(p.beta_m)) throw SimError(ErrorKind::domain, "beta_m must be in [0,1]");
    if (!prob(p.gamma)) throw SimError(ErrorKind::domain, "gamma must be in [0,1]");
    if (!(p.q >= 1.0) || !std::isfinite(p.q)) throw SimError(ErrorKind::domain, "q must be >= 1");
}

/// Initially infected husband: 1 - beta_m * gamma.  Independent of q.
inline double husband_factor_coefficient(const StdParams& p) noexcept { return 1.0 - p.beta_m * p.gamma; }

/// Initially infected wife: 1 + ((1 - beta)^q - 1) * gamma, where
/// (1 - beta)^q is the chance that none of the q wives is infected.
inline double wife_factor_coefficient(const StdParams& p) noexcept {
    return 1.0 + (std::pow(1.0 - p.beta, p.q) - 1.0) * p.gamma;
}

/// xi(k+1) = (alpha/2) * wife_factor * xi(k).
inline double population_step(double xi_k, const StdParams& p) noexcept {
    return 0.5 * p.alpha * wife_factor_coefficient(p) * xi_k;
}

/// xi(k) = ((alpha/2) * wife_factor)^(k-1) * xi(1), for k >= 1.
inline double population_closed_form(double xi_1, int k, const StdParams& p) {
    if (k < 1) throw SimError(ErrorKind::domain, "generation index k must be >= 1");
    return std::pow(0.5 * p.alpha, k - 1) * std::pow(wife_factor_coefficient(p), k - 1) * xi_1;
}

/// Population ratio of a monogamous to a polygynous community after k
/// generations: ((1 - beta*gamma) / wife_factor)^(k-1).  alpha and xi(1)
/// cancel.
inline double monogamy_polygyny_ratio(int k, const StdParams& p) {
    if (k < 1) throw SimError(ErrorKind::domain, "generation index k must be >= 1");
    const double denom = wife_factor_coefficient(p);
    if (!(denom > 0.0)) throw SimError(ErrorKind::domain, "polygynous birth coefficient is not positive");
    return std::pow((1.0 - p.beta * p.gamma) / denom, k - 1);
}

struct CurveTable {
    std::string index_name;               // "q" or "k"
    std::vector<std::string> columns;     // one per parameter set
    std::vector<int> index;
    std::vector<std::vector<double>> rows;  // rows[i][column]
};

/// Column label for a parameter set, e.g. "beta0.04_gamma0.2_q8".
inline std::string curve_label(const StdParams& p, bool with_q) {
    std::string s = "beta" + format_real(p.beta) + "_gamma" + format_real(p.gamma);
    if (with_q) s += "_q" + format_real(p.q);
    return s;
}

/// wife_factor_coefficient at q = 1..q_max for each parameter set (its q
/// field is overridden by the row's q).
inline CurveTable curve_fig4(const std::vector<StdParams>& sets, int q_max) {
    if (q_max < 1) throw SimError(ErrorKind::domain, "q_max must be >= 1");
    CurveTable t;
    t.index_name = "q";
    for (const auto& p : sets) t.columns.push_back(curve_label(p, false));
    for (int q = 1; q <= q_max; ++q) {
        std::vector<double> row;
        for (auto p : sets) {
            p.q = q;
            row.push_back(wife_factor_coefficient(p));
        }
        t.index.push_back(q);
        t.rows.push_back(std::move(row));
    }
    return t;
}

/// monogamy_polygyny_ratio at k = 1..k_max for each parameter set.
inline CurveTable curve_fig5(const std::vector<StdParams>& sets, int k_max) {
    if (k_max < 1) throw SimError(ErrorKind::domain, "k_max must be >= 1");
    CurveTable t;
    t.index_name = "k";
    for (const auto& p : sets) t.columns.push_back(curve_label(p, true));
    for (int k = 1; k <= k_max; ++k) {
        std::vector<double> row;
        for (const auto& p : sets) row.push_back(monogamy_polygyny_ratio(k, p));
        t.index.push_back(k);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace marisim::stdm
