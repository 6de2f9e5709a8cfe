#pragma once

// CSV serialization.  Column order and headers are part of the public
// interface; golden tests pin them.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "format.hpp"
#include "metrics.hpp"
#include "simulation.hpp"
#include "std_model.hpp"

namespace marisim {

inline constexpr const char* kRunHeader =
    "generation,men,women,unmarried_women,polygyny_variance,wealth_gap_ratio";
inline constexpr const char* kSummaryHeader =
    "generation,runs,variance_mean,variance_median,variance_q25,variance_q75,"
    "gap_mean,gap_median,gap_q25,gap_q75";
inline constexpr const char* kStatusHeader = "seed,status,final_generation,generations_recorded";
inline constexpr const char* kCompareHeader =
    "seed,generation,gap_polygyny,gap_monogamy,gap_difference,variance_polygyny,variance_monogamy";

inline void write_run_csv(std::ostream& os, const RunReport& report) {
    os << kRunHeader << '\n';
    for (const auto& r : report.rows)
        os << r.generation << ',' << r.men_count << ',' << r.women_count << ',' << r.unmarried_women << ','
           << format_real(r.polygyny_variance) << ',' << format_real(r.wealth_gap_ratio) << '\n';
}

inline void write_summary_csv(std::ostream& os, const std::vector<GenerationSummary>& rows) {
    os << kSummaryHeader << '\n';
    for (const auto& s : rows) {
        const auto& v = s.polygyny_variance;
        const auto& g = s.wealth_gap_ratio;
        os << s.generation << ',' << s.runs << ',' << format_real(v.mean) << ',' << format_real(v.median)
           << ',' << format_real(v.q25) << ',' << format_real(v.q75) << ',' << format_real(g.mean) << ','
           << format_real(g.median) << ',' << format_real(g.q25) << ',' << format_real(g.q75) << '\n';
    }
}

inline void write_status_csv(std::ostream& os, const std::vector<RunReport>& reports) {
    os << kStatusHeader << '\n';
    for (const auto& r : reports)
        os << r.config.seed << ',' << to_string(r.status) << ',' << r.final_generation << ','
           << r.rows.size() << '\n';
}

/// One row per seed and generation reached by either mode.  difference is
/// monogamy minus polygyny; missing cells are "nan".
inline void write_compare_csv(std::ostream& os, const std::vector<PairedRun>& pairs) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    os << kCompareHeader << '\n';
    for (const auto& p : pairs) {
        const std::size_t n = std::max(p.polygyny.rows.size(), p.monogamy.rows.size());
        for (std::size_t i = 0; i < n; ++i) {
            const GenerationMetrics* a = i < p.polygyny.rows.size() ? &p.polygyny.rows[i] : nullptr;
            const GenerationMetrics* b = i < p.monogamy.rows.size() ? &p.monogamy.rows[i] : nullptr;
            const double gp = a ? a->wealth_gap_ratio : nan;
            const double gm = b ? b->wealth_gap_ratio : nan;
            os << p.seed << ',' << (i + 1) << ',' << format_real(gp) << ',' << format_real(gm) << ','
               << format_real(gm - gp) << ',' << format_real(a ? a->polygyny_variance : nan) << ','
               << format_real(b ? b->polygyny_variance : nan) << '\n';
        }
    }
}

inline void write_curve_csv(std::ostream& os, const stdm::CurveTable& t) {
    os << t.index_name;
    for (const auto& c : t.columns) os << ',' << c;
    os << '\n';
    for (std::size_t i = 0; i < t.index.size(); ++i) {
        os << t.index[i];
        for (double v : t.rows[i]) os << ',' << format_real(v);
        os << '\n';
    }
}

}  // namespace marisim
