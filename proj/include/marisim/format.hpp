#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace marisim {

/// 9 significant digits, '.' decimal separator, "nan" for undefined values.
inline std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace marisim
