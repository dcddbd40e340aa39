#ifndef MATECOMPAT_SYNTHETIC_HPP
#define MATECOMPAT_SYNTHETIC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matecompat/analytics.hpp"
#include "matecompat/random.hpp"

namespace matecompat {

struct DeltaDistribution {
  double mean = 0.0;
  double stddev = 0.0;
};

struct SyntheticProperty {
  std::string name;
  DeltaDistribution female;
  DeltaDistribution male;
  double base_mean = 0.0;  // distribution of hub values
  double base_std = 0.0;
};

struct SyntheticSpec {
  std::vector<SyntheticProperty> properties;
  /// Leaves attached to each hub; larger values make hub users rarer.
  std::size_t leaves_per_hub = 49;
  /// Every drawn value is rounded to a multiple of this (a power of two keeps
  /// the arithmetic exact and the 6-decimal CSV lossless).
  double grid = 0.125;
};

struct SyntheticDataset {
  ProfileTable profiles;
  std::vector<MatingEdge> edges;
  /// property -> per-user preferred difference implied by the construction
  /// (absent for users without the property).
  std::map<std::string, std::vector<std::optional<double>>> ground_truth;
};

/// Builds star-shaped mating components: every hub has a run of opposite-gender
/// leaves, each leaf has only its hub. A leaf's preferred difference is drawn
/// from its gender's distribution; the hub's is minus the mean of its leaves'.
/// Half the stars have female hubs and half male hubs, so each gender is mostly
/// leaves (about 1 / (leaves_per_hub + 1) hubs). Users are split n/2 female.
/// Throws InvalidParameter when a gender would be empty or a parameter is not
/// finite.
SyntheticDataset generate_synthetic(const SyntheticSpec& spec, std::size_t n_users, Rng& rng);

}  // namespace matecompat

#endif  // MATECOMPAT_SYNTHETIC_HPP
