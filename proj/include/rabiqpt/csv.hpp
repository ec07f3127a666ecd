#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rabiqpt::csv {

// Fixed 12-significant-digit rendering; negative zero prints as 0.
std::string format_number(double x);

// Writes `# key: value` preamble lines, one header row, then data rows.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  Writer& meta(std::string_view key, std::string_view value);
  Writer& meta(std::string_view key, double value);
  Writer& header(std::initializer_list<std::string_view> columns);

  Writer& row(std::initializer_list<double> values);
  // Mixed text and numeric cells, already formatted.
  Writer& row_text(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws std::out_of_range when absent.
  std::size_t column(std::string_view name) const;
  const std::string& meta_value(std::string_view key) const;
  double number(std::size_t row, std::string_view column_name) const;
};

// Parses what Writer produces. Throws std::runtime_error on ragged rows or a
// missing header.
Table read(std::istream& in);

}  // namespace rabiqpt::csv
