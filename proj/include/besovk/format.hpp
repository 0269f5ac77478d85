#ifndef BESOVK_FORMAT_HPP
#define BESOVK_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>
#include <system_error>

namespace besovk {

/// Shortest decimal that reads back to the same double; locale independent.
/// Infinities print as "inf"/"-inf" (JSON callers must handle them separately).
inline std::string format_double(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, res.ptr);
    // keep integers visibly floating point: 1 -> 1.0
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

/// Locale-free parse of a full string; accepts "inf"/"infinity".
inline bool parse_double(std::string_view s, double& out) {
    if (s == "inf" || s == "infinity" || s == "Inf" || s == "INF") {
        out = HUGE_VAL;
        return true;
    }
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace besovk

#endif  // BESOVK_FORMAT_HPP
