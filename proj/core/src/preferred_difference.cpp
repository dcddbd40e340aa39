#include "matecompat/preferred_difference.hpp"

#include "matecompat/error.hpp"

namespace matecompat {

PreferredDifferences realized_preferred_differences(std::span<const Mating> mating_log,
                                                    const Population& parents) {
  struct Tally {
    double partner_sum = 0.0;
    std::size_t count = 0;
  };
  std::vector<Tally> fem(parents.females.size());
  std::vector<Tally> mal(parents.males.size());
  for (const auto& m : mating_log) {
    if (m.female >= fem.size() || m.male >= mal.size())
      throw InvalidParameter("mating log references an agent outside the parent population");
    fem[m.female].partner_sum += parents.males[m.male].property;
    ++fem[m.female].count;
    mal[m.male].partner_sum += parents.females[m.female].property;
    ++mal[m.male].count;
  }

  const auto collect = [](const std::vector<Tally>& tallies, const std::vector<Genotype>& agents) {
    std::vector<double> out;
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      if (tallies[i].count == 0) continue;
      const double preferred = tallies[i].partner_sum / static_cast<double>(tallies[i].count);
      out.push_back(preferred - agents[i].property);
    }
    return out;
  };
  return {collect(fem, parents.females), collect(mal, parents.males)};
}

double generation_compatibility(std::span<const Mating> mating_log, const Population& parents,
                                double bin_width) {
  const auto diffs = realized_preferred_differences(mating_log, parents);
  if (diffs.female.empty() || diffs.male.empty()) return 0.0;
  return compatibility(build_histogram(diffs.female, bin_width),
                       build_histogram(diffs.male, bin_width));
}

}  // namespace matecompat
