#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tanglerate {

// Reals are rendered with six significant digits; parsing that string back
// and re-rendering reproduces the exact bytes, so CSV and JSON output agree.
std::string format_real(double v);

class Table {
public:
  // monostate renders as an empty CSV cell / JSON null
  using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;
  using Row = std::vector<Cell>;

  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(Row row);
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }

  // Header row, comma separators, "\n" line endings.
  std::string to_csv() const;

private:
  std::vector<std::string> columns_;
  std::vector<Row> rows_;
};

std::string format_cell(const Table::Cell& cell);

}  // namespace tanglerate
