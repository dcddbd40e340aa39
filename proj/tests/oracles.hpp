// Independent reference computations used only by the tests. Nothing here
// calls into the library's metric code.
#ifndef MATECOMPAT_TESTS_ORACLES_HPP
#define MATECOMPAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Bins = std::map<std::int64_t, double>;

/// rho by the literal definition: sum over the union of supports of
/// min(f(x), m(-x)).
inline double brute_force_rho(const Bins& f, const Bins& m) {
  std::set<std::int64_t> xs;
  for (const auto& [k, v] : f) xs.insert(k);
  for (const auto& [k, v] : m) xs.insert(-k);
  double rho = 0.0;
  for (auto x : xs) {
    const auto fi = f.find(x);
    const auto mi = m.find(-x);
    const double fx = fi == f.end() ? 0.0 : fi->second;
    const double mx = mi == m.end() ? 0.0 : mi->second;
    rho += std::min(fx, mx);
  }
  return rho;
}

/// Round half away from zero written out by hand, not via llround.
inline std::int64_t half_away_bin(double v, double width) {
  const double q = v / width;
  const double a = std::floor(std::fabs(q) + 0.5);
  return static_cast<std::int64_t>(q < 0 ? -a : a);
}

/// Counts-then-normalize histogram.
inline Bins bin_values(const std::vector<double>& values, double width) {
  std::map<std::int64_t, std::size_t> counts;
  for (double v : values) ++counts[half_away_bin(v, width)];
  Bins out;
  for (const auto& [k, c] : counts) out[k] = static_cast<double>(c) / static_cast<double>(values.size());
  return out;
}

inline double mean(const std::vector<double>& v) {
  long double s = 0;
  for (double x : v) s += x;
  return static_cast<double>(s / v.size());
}

inline double population_std(const std::vector<double>& v) {
  const long double mu = mean(v);
  long double ss = 0;
  for (double x : v) ss += (x - mu) * (x - mu);
  return static_cast<double>(std::sqrt(ss / v.size()));
}

}  // namespace oracle

#endif  // MATECOMPAT_TESTS_ORACLES_HPP
