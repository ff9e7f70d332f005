#include "qosc/output.hpp"

#include <cstdio>
#include <limits>

namespace qosc {

Cell text_cell(std::string text) { return {std::move(text), false}; }

Cell number_cell(double value) { return {format_double(value), true}; }

Cell number_cell(const ext_real& value) { return {format_extended(value), true}; }

Cell number_cell(long long value) { return {std::to_string(value), true}; }

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_extended(const ext_real& value) {
  return value.str(std::numeric_limits<ext_real>::max_digits10);
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

bool is_json_number(const std::string& text) {
  // inf/nan have no JSON number literal; fall back to a quoted string
  return text.find_first_not_of("+-0123456789.eE") == std::string::npos &&
         !text.empty();
}

void append_cell_value(std::string& out, const Cell& cell) {
  if (cell.numeric && is_json_number(cell.text))
    out += cell.text;
  else
    out += '"' + json_escape(cell.text) + '"';
}

void append_pairs(std::string& out, const std::vector<std::pair<std::string, Cell>>& pairs,
                  const std::string& indent) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += indent + '"' + json_escape(pairs[i].first) + "\": ";
    append_cell_value(out, pairs[i].second);
    if (i + 1 < pairs.size()) out += ',';
    out += '\n';
  }
}

}  // namespace

std::string to_csv(const OutputRecord& record) {
  std::string out;
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    out += record.columns[i];
    out += i + 1 < record.columns.size() ? "," : "\n";
  }
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i].text;
      out += i + 1 < row.size() ? "," : "\n";
    }
  }
  return out;
}

std::string to_json(const OutputRecord& record) {
  std::string out = "{\n  \"metadata\": {\n";
  out += "    \"schema_version\": \"" + json_escape(record.schema_version) + "\",\n";
  out += "    \"command\": \"" + json_escape(record.command) + "\"";
  out += ",\n    \"parameters\": {\n";
  append_pairs(out, record.parameters, "      ");
  out += "    }";
  if (!record.extra_metadata.empty()) {
    out += ",\n";
    append_pairs(out, record.extra_metadata, "    ");
  } else {
    out += "\n";
  }
  out += "  },\n  \"rows\": [\n";
  for (std::size_t r = 0; r < record.rows.size(); ++r) {
    out += "    {";
    for (std::size_t c = 0; c < record.rows[r].size() && c < record.columns.size(); ++c) {
      out += '"' + json_escape(record.columns[c]) + "\": ";
      append_cell_value(out, record.rows[r][c]);
      if (c + 1 < record.rows[r].size() && c + 1 < record.columns.size()) out += ", ";
    }
    out += r + 1 < record.rows.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace qosc
