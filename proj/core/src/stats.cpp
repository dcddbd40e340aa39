#include "matecompat/stats.hpp"

#include <cmath>

namespace matecompat {

SummaryStats summary_stats(std::span<const double> values, StdDevKind kind) {
  SummaryStats s;
  s.n = values.size();
  if (values.empty()) return s;

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(s.n);

  // Two-pass variance.
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  s.mean = mean;
  if (kind == StdDevKind::population) {
    s.std = std::sqrt(ss / static_cast<double>(s.n));
  } else if (s.n > 1) {
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

}  // namespace matecompat
