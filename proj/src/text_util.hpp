#ifndef GVF_SRC_TEXT_UTIL_HPP
#define GVF_SRC_TEXT_UTIL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gvf::text {

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

std::string_view trim(std::string_view s);

/// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Splits on runs of spaces and tabs.
std::vector<std::string_view> tokenize(std::string_view s);

/// Lines without their terminators; a trailing '\r' is dropped.
std::vector<std::string_view> lines(std::string_view s);

}  // namespace gvf::text

#endif  // GVF_SRC_TEXT_UTIL_HPP
