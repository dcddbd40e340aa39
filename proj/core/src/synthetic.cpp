#include "matecompat/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "matecompat/error.hpp"

namespace matecompat {

namespace {

struct Star {
  std::size_t hub = 0;  // profile index
  std::vector<std::size_t> leaves;
};

void check_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) throw InvalidParameter("synthetic spec: " + what + " is not finite");
}

// Assigns `leaves` (profile indices) round-robin-by-block to the given hubs.
void attach(std::vector<Star>& stars, const std::vector<std::size_t>& hubs,
            const std::vector<std::size_t>& leaves) {
  const std::size_t per = leaves.size() / hubs.size();
  const std::size_t extra = leaves.size() % hubs.size();
  std::size_t next = 0;
  for (std::size_t s = 0; s < hubs.size(); ++s) {
    Star star{hubs[s], {}};
    const std::size_t take = per + (s < extra ? 1 : 0);
    star.leaves.assign(leaves.begin() + static_cast<std::ptrdiff_t>(next),
                       leaves.begin() + static_cast<std::ptrdiff_t>(next + take));
    next += take;
    stars.push_back(std::move(star));
  }
}

std::vector<std::size_t> iota(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (auto i = from; i < to; ++i) v.push_back(i);
  return v;
}

}  // namespace

SyntheticDataset generate_synthetic(const SyntheticSpec& spec, std::size_t n_users, Rng& rng) {
  const std::size_t n_f = n_users / 2;
  const std::size_t n_m = n_users - n_f;
  if (n_f == 0 || n_m == 0)
    throw InvalidParameter("synthetic data needs at least one user of each gender (n_users >= 2)");
  if (spec.leaves_per_hub == 0) throw InvalidParameter("leaves_per_hub must be positive");
  if (!(spec.grid > 0.0) || !std::isfinite(spec.grid))
    throw InvalidParameter("grid must be positive and finite");
  for (const auto& p : spec.properties) {
    check_finite(p.female.mean, p.name + " female mean");
    check_finite(p.female.stddev, p.name + " female stddev");
    check_finite(p.male.mean, p.name + " male mean");
    check_finite(p.male.stddev, p.name + " male stddev");
    check_finite(p.base_mean, p.name + " base mean");
    check_finite(p.base_std, p.name + " base std");
    if (p.female.stddev < 0 || p.male.stddev < 0 || p.base_std < 0)
      throw InvalidParameter("synthetic spec: negative standard deviation for " + p.name);
  }

  std::vector<std::string> names = standard_properties();
  for (const auto& p : spec.properties)
    if (std::find(names.begin(), names.end(), p.name) == names.end()) names.push_back(p.name);

  SyntheticDataset data{ProfileTable(names), {}, {}};
  for (std::size_t i = 0; i < n_f; ++i)
    data.profiles.add({"f" + std::to_string(i + 1), Gender::female,
                       std::vector<std::optional<double>>(names.size())});
  for (std::size_t i = 0; i < n_m; ++i)
    data.profiles.add({"m" + std::to_string(i + 1), Gender::male,
                       std::vector<std::optional<double>>(names.size())});

  // Women occupy [0, n_f), men [n_f, n_users).
  std::vector<Star> stars;
  const std::size_t smaller = std::min(n_f, n_m);
  if (smaller < 2) {
    attach(stars, {0}, iota(n_f, n_users));
  } else {
    const auto wanted = static_cast<std::size_t>(
        std::llround(static_cast<double>(smaller) / static_cast<double>(spec.leaves_per_hub + 1)));
    const std::size_t hubs = std::clamp<std::size_t>(wanted, 1, smaller / 2);
    attach(stars, iota(0, hubs), iota(n_f + hubs, n_users));     // female hubs, male leaves
    attach(stars, iota(n_f, n_f + hubs), iota(hubs, n_f));       // male hubs, female leaves
  }

  for (const auto& star : stars) {
    for (auto leaf : star.leaves) {
      const bool hub_female = data.profiles[star.hub].gender == Gender::female;
      data.edges.push_back({data.profiles[hub_female ? star.hub : leaf].user_id,
                            data.profiles[hub_female ? leaf : star.hub].user_id,
                            hub_female ? star.hub : leaf, hub_female ? leaf : star.hub});
    }
  }

  // ProfileTable is append-only, so values are assembled here and the table rebuilt.
  std::vector<Profile> profiles = data.profiles.profiles();
  const auto snap = [&spec](double v) { return std::round(v / spec.grid) * spec.grid; };
  for (const auto& prop : spec.properties) {
    const std::size_t col = data.profiles.property_column(prop.name);
    auto& truth = data.ground_truth[prop.name];
    truth.assign(n_users, std::nullopt);
    for (const auto& star : stars) {
      const double hub_value = snap(rng.normal(prop.base_mean, prop.base_std));
      profiles[star.hub].values[col] = hub_value;
      const auto& dist =
          profiles[star.hub].gender == Gender::female ? prop.male : prop.female;  // leaves' gender
      double sum = 0.0;
      for (auto leaf : star.leaves) {
        const double leaf_value = hub_value - snap(rng.normal(dist.mean, dist.stddev));
        profiles[leaf].values[col] = leaf_value;
        truth[leaf] = hub_value - leaf_value;
        sum += leaf_value;
      }
      truth[star.hub] = sum / static_cast<double>(star.leaves.size()) - hub_value;
    }
  }

  ProfileTable filled(names);
  for (auto& p : profiles) filled.add(std::move(p));
  data.profiles = std::move(filled);
  return data;
}

}  // namespace matecompat
