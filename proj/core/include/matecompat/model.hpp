#ifndef MATECOMPAT_MODEL_HPP
#define MATECOMPAT_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matecompat/random.hpp"

namespace matecompat {

enum class Gender : std::uint8_t { female = 0, male = 1 };

inline Gender opposite(Gender g) { return g == Gender::female ? Gender::male : Gender::female; }
const char* to_string(Gender g);

/// A simulated agent: gender, one integer property, and the inclusive range of
/// partner property values it accepts.
struct Genotype {
  Gender gender = Gender::female;
  int property = 1;
  int accept_min = 1;
  int accept_max = 1;

  friend bool operator==(const Genotype&, const Genotype&) = default;
  friend auto operator<=>(const Genotype&, const Genotype&) = default;
};

std::string to_string(const Genotype& g);

/// Checks the value-range and gender-ordering invariants for range [1, value_range].
bool respects_invariants(const Genotype& g, int value_range);

struct SimParams {
  int population_cap = 100;      // N, per gender
  int value_range = 9;           // R
  std::int64_t meetings = 20000; // M, per generation
  int max_generations = 1000;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidParameter
};

struct Population {
  std::vector<Genotype> females;
  std::vector<Genotype> males;
  int generation_index = 0;

  bool extinct() const { return females.empty() || males.empty(); }
};

/// A successful meeting, by index into the parent population.
struct Mating {
  std::size_t female = 0;
  std::size_t male = 0;
  friend bool operator==(const Mating&, const Mating&) = default;
};

struct GenerationResult {
  std::vector<Mating> mating_log;
  Population children;
  std::size_t variety = 0;  // distinct genotypes among the children
  bool extinct = false;
};

/// Draws three values in [1, R], sorts them p1 <= p2 <= p3 and returns
/// (0, p1, p2, p3) for a female or (1, p3, p1, p2) for a male.
Genotype init_agent(Gender gender, int value_range, Rng& rng);

/// N females followed by N males, all freshly initialized from `rng`.
Population init_population(const SimParams& params, Rng& rng);

/// True iff `candidate`'s property lies in `chooser`'s acceptance range.
/// Throws ContractViolation when the two share a gender.
bool agrees(const Genotype& chooser, const Genotype& candidate);

/// Both directions of agree(). `female` must be female and `male` male.
bool mutual_agreement(const Genotype& female, const Genotype& male);

/// One random meeting. Draws the female index, then the male index, and (only
/// when both agree) one coin for the child's gender. The child is a copy of
/// the same-gender parent. Successful meetings are appended to `log`.
/// Throws ExtinctionError if either gender pool is empty.
std::optional<Genotype> meet(const Population& pop, Rng& rng, std::vector<Mating>* log = nullptr);

/// Runs `params.meetings` meetings, collects children, then culls each gender
/// to at most `params.population_cap` by uniform sampling without replacement.
GenerationResult advance_generation(const Population& pop, const SimParams& params, Rng& rng);

/// Keeps a uniformly random subset of `cap` members (in original order).
void cull(std::vector<Genotype>& members, std::size_t cap, Rng& rng);

/// Number of distinct genotypes across both genders.
std::size_t genotype_variety(const Population& pop);

}  // namespace matecompat

#endif  // MATECOMPAT_MODEL_HPP
