#pragma once

// Minimal CSV support shared by ingestion, fixtures and report writers.
// Plain comma-separated UTF-8 with a header row and dot decimal separator;
// quoting is not supported (none of the toolkit's formats need it).

#include <iosfwd>
#include <string>
#include <vector>

namespace zetacast::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows; // each padded to header size
};

Table parse(std::istream& in);
Table read_file(const std::string& path); // parse_error if unreadable

// Strict double conversion; `context` and the 1-based data row number feed
// the diagnostic on failure.
double to_number(const std::string& cell, const std::string& context,
                 std::size_t row);

// Column index of `name` in the header, or npos when absent.
std::size_t find_column(const Table& table, const std::string& name);

// Shortest round-trip decimal rendering (std::to_chars), so re-running a
// command reproduces reports byte for byte.
std::string format_number(double value);

void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

} // namespace zetacast::csv
