#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kinklab::csv {

// Scientific notation with 12 significant digits; NaN renders as "nan".
std::string fmt(double value);
std::string fmt(long value);

// Header plus one line per row, comma-separated, single line feeds, no
// trailing separator. Byte-identical output for identical inputs.
void write(std::ostream& out, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows);

}  // namespace kinklab::csv
