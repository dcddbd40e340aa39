#include "matecompat/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "matecompat/error.hpp"

namespace matecompat {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_double(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) return std::nullopt;
  return v;
}

void CsvReader::fail(const std::string& what) const { throw DataError(source_, line_, what); }

CsvReader::Row CsvReader::header() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (trim(text).empty()) continue;
    Row cells = split_csv_line(text);
    width_ = cells.size();
    return cells;
  }
  fail("missing header row");
}

void CsvReader::expect_header(std::initializer_list<const char*> expected) {
  const Row got = header();
  bool ok = got.size() == expected.size();
  std::string want;
  std::size_t i = 0;
  for (const char* name : expected) {
    if (!want.empty()) want += ',';
    want += name;
    if (ok && got[i] != name) ok = false;
    ++i;
  }
  if (!ok) fail("unexpected header, expected '" + want + "'");
}

std::optional<CsvReader::Row> CsvReader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (trim(text).empty()) continue;
    Row cells = split_csv_line(text);
    if (cells.size() != width_)
      fail("expected " + std::to_string(width_) + " cells, found " + std::to_string(cells.size()));
    return cells;
  }
  return std::nullopt;
}

double CsvReader::number(const Row& row, std::size_t col) const {
  const auto v = parse_double(row.at(col));
  if (!v) fail("cell " + std::to_string(col + 1) + " ('" + row.at(col) + "') is not a finite number");
  return *v;
}

}  // namespace matecompat
