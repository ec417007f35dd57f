#include "kinklab/csv.hpp"

#include <cmath>
#include <cstdio>

namespace kinklab::csv {

std::string fmt(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", value);
  return buf;
}

std::string fmt(long value) { return std::to_string(value); }

void write(std::ostream& out, const std::vector<std::string>& header,
           const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  out.flush();
}

}  // namespace kinklab::csv
