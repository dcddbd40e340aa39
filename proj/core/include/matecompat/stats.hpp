#ifndef MATECOMPAT_STATS_HPP
#define MATECOMPAT_STATS_HPP

#include <cstddef>
#include <optional>
#include <span>

namespace matecompat {

enum class StdDevKind { population, sample };

/// Mean and standard deviation; both are absent when n == 0 (and std is
/// absent for the sample estimator when n == 1).
struct SummaryStats {
  std::optional<double> mean;
  std::optional<double> std;
  std::size_t n = 0;

  bool defined() const { return mean.has_value() && std.has_value(); }
};

/// Population standard deviation (divide by n) unless `kind` says otherwise.
SummaryStats summary_stats(std::span<const double> values,
                           StdDevKind kind = StdDevKind::population);

}  // namespace matecompat

#endif  // MATECOMPAT_STATS_HPP
