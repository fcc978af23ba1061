#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace vlclink {

/// Shortest decimal string that round-trips the double exactly. Uses
/// std::to_chars, so output is locale-independent by construction.
inline std::string format_shortest(double value) {
    char buf[64];
    const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

/// Scientific notation with 9 significant digits, e.g. "3.08860061e-06".
inline std::string format_scientific9(double value) {
    char buf[64];
    const std::to_chars_result res =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::scientific, 8);
    return std::string(buf, res.ptr);
}

}  // namespace vlclink
