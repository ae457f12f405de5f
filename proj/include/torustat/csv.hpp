#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torustat {

/// Parsed CSV: comma-separated, UTF-8, '.' decimal, header row required,
/// empty cells mark missing values.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by header name; throws DataError when absent.
  std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

/// Formats a double with 17 significant digits (round-trip exact).
std::string format_double(double v);

/// Writes a CSV file; every row must match the header width.
void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace torustat
