#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace slitflow::sim {

/// Shortest decimal text that parses back to exactly x.
std::string format_double(double x);

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are wrapped
/// in quotes with inner quotes doubled.
std::string csv_escape(std::string_view field);

using CsvCell = std::variant<double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  /// True when no numeric cell is NaN or infinite.
  bool all_finite() const;
  /// Comment lines are prefixed with "# "; rows end with LF.
  std::string render(const std::vector<std::string>& comments = {}) const;
};

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace slitflow::sim
