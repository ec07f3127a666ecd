#include "rabiqpt/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rabiqpt::csv {

std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Writer& Writer::meta(std::string_view key, std::string_view value) {
  out_ << "# " << key << ": " << value << '\n';
  return *this;
}

Writer& Writer::meta(std::string_view key, double value) {
  return meta(key, format_number(value));
}

Writer& Writer::header(std::initializer_list<std::string_view> columns) {
  bool first = true;
  for (auto c : columns) {
    if (!first) out_ << ',';
    out_ << c;
    first = false;
  }
  out_ << '\n';
  return *this;
}

Writer& Writer::row(std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out_ << ',';
    out_ << format_number(v);
    first = false;
  }
  out_ << '\n';
  return *this;
}

Writer& Writer::row_text(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
  return *this;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Table read(std::istream& in) {
  Table t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto body = line.substr(1);
      if (!body.empty() && body[0] == ' ') body.erase(0, 1);
      const auto colon = body.find(": ");
      if (colon == std::string::npos) {
        t.metadata.emplace_back(body, "");
      } else {
        t.metadata.emplace_back(body.substr(0, colon), body.substr(colon + 2));
      }
      continue;
    }
    auto cells = split(line);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw std::runtime_error("csv: row has " + std::to_string(cells.size()) +
                               " cells, header has " +
                               std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw std::runtime_error("csv: missing header row");
  return t;
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("csv: no column '" + std::string(name) + "'");
}

const std::string& Table::meta_value(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  throw std::out_of_range("csv: no metadata key '" + std::string(key) + "'");
}

double Table::number(std::size_t row, std::string_view column_name) const {
  return std::stod(rows.at(row).at(column(column_name)));
}

}  // namespace rabiqpt::csv
