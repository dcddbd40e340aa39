#ifndef MATECOMPAT_CSV_HPP
#define MATECOMPAT_CSV_HPP

#include <initializer_list>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace matecompat {

/// Minimal reader for the unquoted comma-separated files used here.
/// Tracks 1-based line numbers for error messages; blank lines are skipped.
class CsvReader {
 public:
  using Row = std::vector<std::string>;

  CsvReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Reads the header row and returns its cells.
  Row header();
  /// Reads the header and requires it to equal `expected`.
  void expect_header(std::initializer_list<const char*> expected);

  /// Next non-blank row, or nullopt at end of input. Rows must have as many
  /// cells as the header.
  std::optional<Row> next();

  /// Cell `col` parsed as a finite double; throws DataError otherwise.
  double number(const Row& row, std::size_t col) const;

  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
  std::size_t width_ = 0;
};

std::vector<std::string> split_csv_line(const std::string& line);

/// Parses a finite double, accepting surrounding whitespace only.
std::optional<double> parse_double(const std::string& text);

}  // namespace matecompat

#endif  // MATECOMPAT_CSV_HPP
