#pragma once

// Number formatting shared by the CSV and model readers/writers. Doubles are
// written with 17 significant digits, which round-trips every finite value.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlc::text {

std::string format_double(double v);
std::string format_list(std::span<const double> values, char sep = ',');

// Whole-string parse; no leading/trailing garbage, finite values only.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_integer(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

}  // namespace qlc::text
