#include "swipt/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace swipt {

std::string format_number(double x) {
  if (std::isnan(x)) return {};
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buffer, end);
}

void Table::add_row(const std::vector<double>& values) {
  std::vector<std::string> row;
  row.reserve(values.size());
  for (const double v : values) row.push_back(format_number(v));
  rows.push_back(std::move(row));
}

namespace {

void write_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    out << cells[i];
  }
  out << '\n';
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  write_line(out, table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) {
      throw std::logic_error("write_csv: row width differs from header");
    }
    write_line(out, row);
  }
}

}  // namespace swipt
