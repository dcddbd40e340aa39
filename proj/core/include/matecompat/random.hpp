#ifndef MATECOMPAT_RANDOM_HPP
#define MATECOMPAT_RANDOM_HPP

#include <cstdint>
#include <random>

namespace matecompat {

/// Seedable random stream used by every stochastic operation.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// Integer and coin draws are derived from raw engine output here rather than
/// through std::uniform_int_distribution, whose algorithm is implementation
/// defined; this keeps trajectories identical across standard libraries.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi] (inclusive).
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Fair coin, one engine draw.
  bool coin() { return (engine_() >> 63) != 0; }

  /// Normal deviate via std::normal_distribution (not portable across stdlibs).
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

}  // namespace matecompat

#endif  // MATECOMPAT_RANDOM_HPP
