#pragma once

#include <cstdio>
#include <string>

namespace preheight {

/// Floating-point output format shared by CSV and JSON mirrors:
/// 12 significant digits, shortest form.
inline std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace preheight
