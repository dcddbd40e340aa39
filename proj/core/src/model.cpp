#include "matecompat/model.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "matecompat/error.hpp"

namespace matecompat {

const char* to_string(Gender g) { return g == Gender::female ? "female" : "male"; }

std::string to_string(const Genotype& g) {
  return "(" + std::to_string(static_cast<int>(g.gender)) + ", " + std::to_string(g.property) +
         ", " + std::to_string(g.accept_min) + ", " + std::to_string(g.accept_max) + ")";
}

bool respects_invariants(const Genotype& g, int value_range) {
  const auto in_range = [value_range](int v) { return v >= 1 && v <= value_range; };
  if (!in_range(g.property) || !in_range(g.accept_min) || !in_range(g.accept_max)) return false;
  if (g.accept_min > g.accept_max) return false;
  return g.gender == Gender::female ? g.property <= g.accept_min : g.property >= g.accept_max;
}

void SimParams::validate() const {
  if (population_cap < 1) throw InvalidParameter("population cap N must be >= 1");
  if (value_range < 1) throw InvalidParameter("value range R must be >= 1");
  if (meetings < 0) throw InvalidParameter("meetings M must be >= 0");
  if (max_generations < 1) throw InvalidParameter("max_generations must be >= 1");
}

Genotype init_agent(Gender gender, int value_range, Rng& rng) {
  if (value_range < 1) throw InvalidParameter("init_agent: value range R must be >= 1");
  std::array<int, 3> p{};
  for (auto& v : p) v = static_cast<int>(rng.between(1, value_range));
  std::sort(p.begin(), p.end());
  if (gender == Gender::female) return {Gender::female, p[0], p[1], p[2]};
  return {Gender::male, p[2], p[0], p[1]};
}

Population init_population(const SimParams& params, Rng& rng) {
  params.validate();
  Population pop;
  pop.females.reserve(static_cast<std::size_t>(params.population_cap));
  pop.males.reserve(static_cast<std::size_t>(params.population_cap));
  for (int i = 0; i < params.population_cap; ++i)
    pop.females.push_back(init_agent(Gender::female, params.value_range, rng));
  for (int i = 0; i < params.population_cap; ++i)
    pop.males.push_back(init_agent(Gender::male, params.value_range, rng));
  return pop;
}

bool agrees(const Genotype& chooser, const Genotype& candidate) {
  if (chooser.gender == candidate.gender)
    throw ContractViolation("agrees: both agents are " + std::string(to_string(chooser.gender)));
  return chooser.accept_min <= candidate.property && candidate.property <= chooser.accept_max;
}

bool mutual_agreement(const Genotype& female, const Genotype& male) {
  if (female.gender != Gender::female || male.gender != Gender::male)
    throw ContractViolation("mutual_agreement: expected (female, male), got " + to_string(female) +
                            " and " + to_string(male));
  return agrees(female, male) && agrees(male, female);
}

std::optional<Genotype> meet(const Population& pop, Rng& rng, std::vector<Mating>* log) {
  if (pop.extinct()) throw ExtinctionError("meet: a gender pool is empty");
  const auto fi = static_cast<std::size_t>(rng.below(pop.females.size()));
  const auto mi = static_cast<std::size_t>(rng.below(pop.males.size()));
  const Genotype& mother = pop.females[fi];
  const Genotype& father = pop.males[mi];
  if (!mutual_agreement(mother, father)) return std::nullopt;
  if (log != nullptr) log->push_back({fi, mi});
  return rng.coin() ? father : mother;
}

void cull(std::vector<Genotype>& members, std::size_t cap, Rng& rng) {
  if (members.size() <= cap) return;
  // Partial Fisher-Yates over indices picks `cap` survivors; survivors keep
  // their original relative order.
  std::vector<std::size_t> idx(members.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < cap; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(cap);
  std::sort(idx.begin(), idx.end());
  std::vector<Genotype> kept;
  kept.reserve(cap);
  for (auto i : idx) kept.push_back(members[i]);
  members = std::move(kept);
}

GenerationResult advance_generation(const Population& pop, const SimParams& params, Rng& rng) {
  params.validate();
  if (pop.extinct()) throw ExtinctionError("advance_generation: population is extinct");

  GenerationResult result;
  result.children.generation_index = pop.generation_index + 1;
  for (std::int64_t k = 0; k < params.meetings; ++k) {
    auto child = meet(pop, rng, &result.mating_log);
    if (!child) continue;
    (child->gender == Gender::female ? result.children.females : result.children.males)
        .push_back(*child);
  }
  const auto cap = static_cast<std::size_t>(params.population_cap);
  cull(result.children.females, cap, rng);
  cull(result.children.males, cap, rng);
  result.variety = genotype_variety(result.children);
  result.extinct = result.children.extinct();
  return result;
}

std::size_t genotype_variety(const Population& pop) {
  std::set<Genotype> distinct(pop.females.begin(), pop.females.end());
  distinct.insert(pop.males.begin(), pop.males.end());
  return distinct.size();
}

}  // namespace matecompat
