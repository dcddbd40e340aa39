#ifndef MATECOMPAT_HISTOGRAM_HPP
#define MATECOMPAT_HISTOGRAM_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

namespace matecompat {

/// Normalized distribution over signed bins of fixed width.
///
/// Bin k holds values v with round-half-away-from-zero(v / bin_width) == k, so
/// negating every value negates every bin index.
struct Histogram {
  double bin_width = 1.0;
  std::map<std::int64_t, double> bins;  // index -> probability mass
  std::size_t total_count = 0;

  bool empty() const { return total_count == 0; }
  double mass(std::int64_t k) const {
    auto it = bins.find(k);
    return it == bins.end() ? 0.0 : it->second;
  }
  double center(std::int64_t k) const { return static_cast<double>(k) * bin_width; }

  friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Bin index of `value` for the given width.
std::int64_t bin_index(double value, double bin_width);

/// Throws InvalidParameter for a non-positive or non-finite bin width.
Histogram build_histogram(std::span<const double> values, double bin_width);

/// Same histogram with every bin index negated.
Histogram mirror(const Histogram& h);

/// Compatibility rho = sum over k of min(f[k], m[-k]), in [0, 1]; 0 when
/// either side is empty. Inputs must be normalized.
/// Throws InvalidParameter when the bin widths differ.
double compatibility(const Histogram& female, const Histogram& male);

/// Per-bin contribution min(f[k], m[-k]) keyed by the female-side index.
std::map<std::int64_t, double> compatibility_terms(const Histogram& female, const Histogram& male);

// Serialization. CSV is plot-ready (bin_center,mass at six decimals); JSON is
// {bin_width, bins: {"index": mass}, total_count} and round-trips exactly.
void write_csv(std::ostream& out, const Histogram& h);
std::string to_json(const Histogram& h);

/// Parses the JSON form. Validates masses (finite, >= 0, summing to 1 within
/// 1e-6 when non-empty). `source` is used in error messages.
Histogram histogram_from_json(const std::string& text, const std::string& source = "<json>");

/// Parses the CSV form; the width is not stored in CSV so it must be supplied.
Histogram histogram_from_csv(const std::string& text, double bin_width,
                             const std::string& source = "<csv>");

/// Loads by extension: .json, or .csv when `csv_bin_width` is given.
Histogram load_histogram(const std::string& path, double csv_bin_width = 0.0);

}  // namespace matecompat

#endif  // MATECOMPAT_HISTOGRAM_HPP
