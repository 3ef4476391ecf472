#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "zmw/error.hpp"

namespace zmw::cli {

std::string format_number(double v, const std::string& column) {
  if (!std::isfinite(v)) throw ConvergenceError("non-finite value in column '" + column + "'");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvTable::CsvTable(std::string schema, std::vector<std::string> columns)
    : schema_(std::move(schema)), columns_(std::move(columns)) {}

CsvTable& CsvTable::add(std::vector<std::string> cells) {
  if (cells.size() != columns_.size()) {
    throw std::logic_error("CsvTable: row width does not match the header");
  }
  rows_.push_back(std::move(cells));
  return *this;
}

std::string CsvTable::num(double v, std::size_t column) const {
  return format_number(v, columns_.at(column));
}

void CsvTable::write(std::ostream& out) const {
  out << "# schema: " << schema_ << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

void check_finite(const nlohmann::json& doc) {
  if (doc.is_number_float() && !std::isfinite(doc.get<double>())) {
    throw ConvergenceError("non-finite value in JSON output");
  }
  if (doc.is_structured()) {
    for (const auto& item : doc) check_finite(item);
  }
}

}  // namespace zmw::cli
