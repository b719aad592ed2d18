// Shortest round-trip decimal formatting for doubles.

#include "a3b/format.hpp"

#include <charconv>

namespace a3b {

std::string format_double(double x) {
    if (x == 0) x = 0; // normalize -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

} // namespace a3b
