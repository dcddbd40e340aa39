#include <doctest.h>

#include <sstream>

#include "matecompat/analytics.hpp"
#include "matecompat/error.hpp"
#include "matecompat/synthetic.hpp"
#include "oracles.hpp"

using namespace matecompat;

namespace {

SyntheticSpec single(double mu_f, double sd_f, double mu_m, double sd_m, std::size_t leaves = 49) {
  SyntheticSpec spec;
  spec.properties.push_back({"age", {mu_f, sd_f}, {mu_m, sd_m}, 30.0, 5.0});
  spec.leaves_per_hub = leaves;
  return spec;
}

// Writes and re-reads the dataset through the ingestion format.
std::pair<ProfileTable, std::vector<MatingEdge>> round_trip(const SyntheticDataset& data) {
  std::ostringstream p, m;
  write_profiles_csv(p, data.profiles);
  write_matings_csv(m, data.edges);
  std::istringstream pin(p.str()), min(m.str());
  auto profiles = parse_profiles(pin);
  auto edges = parse_matings(min, profiles);
  return {std::move(profiles), std::move(edges)};
}

}  // namespace

TEST_CASE("constant preferred differences are reproduced exactly") {
  Rng rng(1);
  const auto data = generate_synthetic(single(5.0, 0.0, -5.0, 0.0, 9), 400, rng);
  const auto [profiles, edges] = round_trip(data);
  const auto reports = property_report(profiles, edges, {{"age", 1.0}});
  const auto& row = reports.at(0).row;
  CHECK(*row.mu_f == 5.0);
  CHECK(*row.sigma_f == 0.0);
  CHECK(*row.mu_m == -5.0);
  CHECK(*row.sigma_m == 0.0);
  CHECK(row.n_f == 200);
  CHECK(row.n_m == 200);
}

TEST_CASE("two users make a single couple") {
  Rng rng(3);
  const auto data = generate_synthetic(single(2.0, 1.0, -2.0, 1.0), 2, rng);
  REQUIRE(data.profiles.size() == 2);
  REQUIRE(data.edges.size() == 1);
  const auto table = preferred_difference_table(data.profiles, data.edges, "age");
  REQUIRE(table.records.size() == 2);
  CHECK(table.records[0].partners == 1);
  CHECK(table.records[1].partners == 1);
  CHECK(table.records[0].delta == -table.records[1].delta);
}

TEST_CASE("degenerate requests are rejected") {
  Rng rng(1);
  CHECK_THROWS_AS(generate_synthetic(single(0, 1, 0, 1), 1, rng), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic(single(0, 1, 0, 1), 0, rng), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic(single(0, -1, 0, 1), 10, rng), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic(single(std::nan(""), 1, 0, 1), 10, rng), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic(single(0, 1, 0, 1, 0), 10, rng), InvalidParameter);
}

TEST_CASE("pipeline recovers the recorded ground truth for every user") {
  for (std::size_t n : {3u, 5u, 17u, 250u, 1001u}) {
    Rng rng(n);
    const auto data = generate_synthetic(single(2.74, 5.23, -2.90, 5.06, 7), n, rng);
    const auto [profiles, edges] = round_trip(data);
    const auto table = preferred_difference_table(profiles, edges, "age");
    const auto& truth = data.ground_truth.at("age");
    REQUIRE(table.records.size() == n);  // every user has a value and a partner
    for (const auto& r : table.records) {
      REQUIRE(truth[r.user].has_value());
      CHECK(std::abs(r.delta - *truth[r.user]) <= 1e-9);
    }
  }
}

TEST_CASE("each gender is mostly leaves with the requested spread") {
  Rng rng(8);
  const auto data = generate_synthetic(single(2.74, 5.23, -2.90, 5.06), 20000, rng);
  std::size_t hubs = 0;
  std::vector<std::size_t> degree(data.profiles.size());
  for (const auto& e : data.edges) {
    ++degree[e.female];
    ++degree[e.male];
  }
  for (auto d : degree) hubs += d > 1 ? 1 : 0;
  // 10000 / 50 = 200 hubs per gender.
  CHECK(hubs == 400);
  CHECK(data.edges.size() == 20000 - 400);
}

TEST_CASE("mirrored Gaussians give near-perfect compatibility") {
  Rng rng(21);
  const auto data = generate_synthetic(single(3.0, 4.0, -3.0, 4.0), 400000, rng);
  const auto reports = property_report(data.profiles, data.edges, {{"age", 1.0}});
  const double rho = reports.at(0).row.rho;
  // Independent route: bin the recorded ground truth by hand and brute-force rho.
  std::vector<double> f, m;
  const auto& truth = data.ground_truth.at("age");
  for (std::size_t i = 0; i < data.profiles.size(); ++i)
    (data.profiles[i].gender == Gender::female ? f : m).push_back(*truth[i]);
  const double brute = oracle::brute_force_rho(oracle::bin_values(f, 1.0), oracle::bin_values(m, 1.0));
  CHECK(std::abs(rho - brute) <= 1e-12);
  CHECK(rho >= 0.99);
}

TEST_CASE("sign pattern and moments of a realistic age row") {
  Rng rng(2);
  const auto data = generate_synthetic(single(2.74, 5.23, -2.90, 5.06), 20000, rng);
  const auto reports = property_report(data.profiles, data.edges, {{"age", 1.0}});
  const auto& row = reports.at(0).row;
  CHECK(*row.mu_f > 0.0);
  CHECK(*row.mu_m < 0.0);
  CHECK(std::abs(*row.mu_f - 2.74) <= 0.2);
  CHECK(std::abs(*row.mu_m + 2.90) <= 0.2);
  CHECK(std::abs(*row.sigma_f - 5.23) <= 0.2);
  CHECK(std::abs(*row.sigma_m - 5.06) <= 0.2);
}

TEST_CASE("several properties share one mating graph") {
  SyntheticSpec spec = single(2.74, 5.23, -2.90, 5.06, 9);
  spec.properties.push_back({"height", {11.37, 7.09}, {-11.12, 6.76}, 170.0, 8.0});
  spec.properties.push_back({"shoe_size", {0.5, 1.0}, {-0.5, 1.0}, 40.0, 2.0});
  Rng rng(5);
  const auto data = generate_synthetic(spec, 1000, rng);
  CHECK(data.profiles.property_names().back() == "shoe_size");
  const auto reports = property_report(data.profiles, data.edges,
                                       {{"age", 1.0}, {"height", 1.0}, {"shoe_size", 0.5}});
  CHECK(*reports[1].row.mu_f > 5.0);
  CHECK(*reports[1].row.mu_m < -5.0);
  // Untouched standard columns are absent for everyone.
  const auto income = preferred_difference_table(data.profiles, data.edges, "income");
  CHECK(income.records.empty());
  CHECK(income.excluded_female.missing_own == 500);
}
