#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ptcl::cli {

/// Empty cells serialize as "" in CSV and null in JSON.
using Cell = std::variant<std::monostate, long long, double, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

Cell optional_cell(const std::optional<double>& value);

/// 17 significant digits, '.' decimal separator.
std::string format_double(double value);

enum class OutputFormat { Csv, Json };

/// CSV starts with "# pt-coulomb-lab v1, command=<command>" followed by any
/// extra comment lines, then the column header.
void write_table(std::ostream& out, const Table& table, OutputFormat format, const std::string& command,
                 const std::vector<std::string>& comments = {});

}  // namespace ptcl::cli
