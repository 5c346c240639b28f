#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace quasidim::app {

/// "%.10g"; non-finite values print as nan / inf / -inf.
std::string format_number(double v);

/// RFC 4180 table: CRLF line ends, fields quoted only when needed.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  std::size_t rows() const { return rows_.size(); }
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct Series {
  std::string label;
  std::string color;
  std::vector<double> x, y;
  bool dashed = false;
  bool markers = false;
};

/// Line chart with linear axes, legend top-left. Deterministic output.
std::string svg_line_chart(std::string_view title, std::string_view x_label, std::string_view y_label,
                           const std::vector<Series>& series, double y_min, double y_max);

void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace quasidim::app
