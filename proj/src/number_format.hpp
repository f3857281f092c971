#ifndef CABINET_NUMBER_FORMAT_HPP
#define CABINET_NUMBER_FORMAT_HPP

#include <charconv>
#include <string>

namespace cabinet::detail {

/// Shortest representation that reads back to the same double.
inline std::string format_number(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace cabinet::detail

#endif  // CABINET_NUMBER_FORMAT_HPP
