#ifndef MATECOMPAT_PREFERRED_DIFFERENCE_HPP
#define MATECOMPAT_PREFERRED_DIFFERENCE_HPP

#include <span>
#include <vector>

#include "matecompat/histogram.hpp"
#include "matecompat/model.hpp"

namespace matecompat {

/// Preferred differences of the agents that mated at least once, per gender.
struct PreferredDifferences {
  std::vector<double> female;
  std::vector<double> male;
};

/// For every agent with at least one successful meeting, the mean property of
/// its realized partners (counted with multiplicity) minus its own property.
/// Output is ordered by agent index. Throws InvalidParameter on an index that
/// does not resolve into `parents`.
PreferredDifferences realized_preferred_differences(std::span<const Mating> mating_log,
                                                    const Population& parents);

/// Compatibility of one generation: histograms of the realized preferred
/// differences (each gender normalized on its own) compared with rho.
/// Zero when either gender has no matings.
double generation_compatibility(std::span<const Mating> mating_log, const Population& parents,
                                double bin_width = 1.0);

}  // namespace matecompat

#endif  // MATECOMPAT_PREFERRED_DIFFERENCE_HPP
