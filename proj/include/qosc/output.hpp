#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qosc/extended.hpp"

namespace qosc {

/// One value cell: the final rendered text plus whether it is numeric.
/// Both output formats copy the text verbatim, which is what guarantees
/// that the CSV and JSON renderings carry identical numeric values.
struct Cell {
  std::string text;
  bool numeric = false;
};

Cell text_cell(std::string text);
Cell number_cell(double value);
Cell number_cell(const ext_real& value);
Cell number_cell(long long value);

/// Round-trip-exact decimal rendering: 17 significant digits.
std::string format_double(double value);
/// Full digit count of the extended type.
std::string format_extended(const ext_real& value);

struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::pair<std::string, Cell>> parameters;
  std::vector<std::pair<std::string, Cell>> extra_metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header row plus data rows, comma separated, LF line endings.
std::string to_csv(const OutputRecord& record);

/// Single top-level object {"metadata": ..., "rows": [...]}.  Numeric cells
/// are emitted as bare JSON number literals so no precision is lost.
std::string to_json(const OutputRecord& record);

}  // namespace qosc
