#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace zmw::cli {

/// "%.17g"; throws ConvergenceError on NaN/Inf so no non-finite cell escapes.
std::string format_number(double v, const std::string& column);

/**
 * CSV table: a "# schema: <name>/<version>" line, a header, then rows.
 * Numbers are written with 17 significant digits and '.' as decimal mark.
 */
class CsvTable {
 public:
  CsvTable(std::string schema, std::vector<std::string> columns);

  CsvTable& add(std::vector<std::string> cells);
  std::string num(double v, std::size_t column) const;
  void write(std::ostream& out) const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::string schema_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Rejects non-finite numbers anywhere in the document.
void check_finite(const nlohmann::json& doc);

}  // namespace zmw::cli
