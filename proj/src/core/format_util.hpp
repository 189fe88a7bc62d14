#pragma once

#include <charconv>
#include <string>

namespace zeroacf {

// Shortest decimal string that round-trips to the same double. Keeps CSV
// output stable and exactly re-readable.
inline std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace zeroacf
