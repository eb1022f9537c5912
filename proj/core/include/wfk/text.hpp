#pragma once

#include <cstdio>
#include <string>

namespace wfk {

/// Shortest %.17g rendering: 17 significant digits round-trip exactly for
/// IEEE doubles, '.' decimal regardless of locale machinery above us.
inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace wfk
