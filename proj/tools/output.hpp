#pragma once

#include <charconv>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace qslip::cli {

using Json = nlohmann::ordered_json;

/// monostate is written as NA in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest form with 17 significant digits, independent of the locale.
inline std::string format_number(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline std::string format_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return "NA"; }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  } visit;
  return std::visit(visit, c);
}

inline Json cell_json(const Cell& c) {
  struct {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(double v) const { return v; }
    Json operator()(const std::string& s) const { return s; }
    Json operator()(bool b) const { return b; }
  } visit;
  return std::visit(visit, c);
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << fields[k];
  os << '\n';
}

inline void write_csv(std::ostream& os, const Table& t) {
  write_csv_row(os, t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> fields;
    for (const auto& c : row) fields.push_back(format_cell(c));
    write_csv_row(os, fields);
  }
}

inline Json table_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  return Json{{"columns", t.columns}, {"rows", std::move(rows)}};
}

/// A flat record as a one-row CSV table.
inline void write_record_csv(std::ostream& os, const Json& record) {
  std::vector<std::string> keys, values;
  for (const auto& [key, value] : record.items()) {
    keys.push_back(key);
    if (value.is_null())
      values.push_back("NA");
    else if (value.is_number())
      values.push_back(format_number(value.get<double>()));
    else if (value.is_boolean())
      values.push_back(value.get<bool>() ? "true" : "false");
    else if (value.is_string())
      values.push_back(value.get<std::string>());
    else
      values.push_back(value.dump());
  }
  write_csv_row(os, keys);
  write_csv_row(os, values);
}

}  // namespace qslip::cli
