#pragma once

#include <string>
#include <vector>

namespace polyqm::io {

// Shortest-faithful decimal with the given number of significant digits,
// always '.' as the decimal separator regardless of locale.
std::string format_number(double value, int significant_digits);

std::string join_csv(const std::vector<std::string>& cells);

}  // namespace polyqm::io
