#include "zetacast/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "zetacast/errors.hpp"

namespace zetacast::csv {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    cells.push_back(trim(cell));
  }
  if (!line.empty() && line.back() == ',') {
    cells.emplace_back();
  }
  return cells;
}

} // namespace

Table parse(std::istream& in) {
  Table table;
  std::string line;
  bool saw_header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') {
      continue;
    }
    auto cells = split_line(stripped);
    if (!saw_header) {
      table.header = std::move(cells);
      saw_header = true;
      continue;
    }
    if (cells.size() > table.header.size()) {
      throw parse_error("csv: line " + std::to_string(lineno) + " has " +
                        std::to_string(cells.size()) + " cells, header has " +
                        std::to_string(table.header.size()));
    }
    cells.resize(table.header.size());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("csv: cannot open '" + path + "'");
  }
  return parse(in);
}

double to_number(const std::string& raw, const std::string& context,
                 std::size_t row) {
  const std::string cell = trim(raw);
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || cell.empty()) {
    throw parse_error("csv: row " + std::to_string(row) + ": " + context +
                      " is not a number: '" + cell + "'");
  }
  return value;
}

std::size_t find_column(const Table& table, const std::string& name) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (table.header[i] == name) {
      return i;
    }
  }
  return std::string::npos;
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    return "nan";
  }
  return std::string(buf, ptr);
}

void write_file(const std::string& path, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) {
    throw parse_error("csv: cannot write '" + path + "'");
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << '\n';
  }
}

} // namespace zetacast::csv
