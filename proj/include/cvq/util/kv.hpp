#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cvq::kv {

// Flat `key = value` text: one pair per line, '#' starts a comment, blank
// lines ignored. Keys keep their order; duplicates are rejected.
std::vector<std::pair<std::string, std::string>> parse(std::string_view text);

std::string trim(std::string_view s);
double to_double(std::string_view key, std::string_view value);
long long to_int(std::string_view key, std::string_view value);
std::vector<double> to_doubles(std::string_view key, std::string_view value);

// Shortest text that parses back to the same double.
std::string format(double v);
std::string format(const std::vector<double>& v);

}  // namespace cvq::kv
