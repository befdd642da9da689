#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace swipt {

/// Shortest decimal that parses back to the same double; NaN becomes an
/// empty string (a missing value).
std::string format_number(double x);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
};

/// Comma separated, header first, '\n' line endings.
void write_csv(std::ostream& out, const Table& table);

}  // namespace swipt
