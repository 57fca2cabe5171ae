#include "polyqm/io.hpp"

#include <cstdio>
#include <stdexcept>

namespace polyqm::io {

std::string format_number(double value, int significant_digits) {
    if (significant_digits < 1 || significant_digits > 17)
        throw std::invalid_argument("precision must be between 1 and 17");
    char buffer[64];
    // %g is locale-independent for the decimal point only under the "C"
    // locale; we never call setlocale, so the default applies.
    std::snprintf(buffer, sizeof(buffer), "%.*g", significant_digits, value);
    return buffer;
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

}  // namespace polyqm::io
