#ifndef MATECOMPAT_ANALYTICS_HPP
#define MATECOMPAT_ANALYTICS_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matecompat/histogram.hpp"
#include "matecompat/model.hpp"
#include "matecompat/stats.hpp"

namespace matecompat {

/// Property columns of the standard profiles file, in header order.
const std::vector<std::string>& standard_properties();

struct Profile {
  std::string user_id;
  Gender gender = Gender::female;
  std::vector<std::optional<double>> values;  // aligned with ProfileTable::property_names()
};

/// Profiles keyed by unique user id. Every profile carries one optional value
/// per property column.
class ProfileTable {
 public:
  explicit ProfileTable(std::vector<std::string> property_names = standard_properties());

  /// Throws DataError naming the id if it is already present.
  std::size_t add(Profile profile);

  std::optional<std::size_t> find(const std::string& user_id) const;
  /// Column of `name`; throws InvalidParameter listing the known names.
  std::size_t property_column(const std::string& name) const;

  const std::vector<std::string>& property_names() const { return names_; }
  const std::vector<Profile>& profiles() const { return profiles_; }
  const Profile& operator[](std::size_t i) const { return profiles_[i]; }
  std::size_t size() const { return profiles_.size(); }
  std::size_t count(Gender g) const;

 private:
  std::vector<std::string> names_;
  std::vector<Profile> profiles_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// An undirected heterosexual mating pair, stored female first.
struct MatingEdge {
  std::string female_id;
  std::string male_id;
  std::size_t female = 0;  // index into the profile table
  std::size_t male = 0;
};

/// Header `user_id,gender,<property>...`; gender is F or M; an empty cell
/// marks the property absent.
ProfileTable parse_profiles(std::istream& in, const std::string& source = "<profiles>");
ProfileTable load_profiles(const std::filesystem::path& path);

/// Header `user_a,user_b`. Both orientations of a pair collapse into one edge.
/// Unknown ids, self-edges and same-gender edges are errors.
std::vector<MatingEdge> parse_matings(std::istream& in, const ProfileTable& profiles,
                                      const std::string& source = "<matings>");
std::vector<MatingEdge> load_matings(const std::filesystem::path& path, const ProfileTable& profiles);

void write_profiles_csv(std::ostream& out, const ProfileTable& profiles);
void write_matings_csv(std::ostream& out, const std::vector<MatingEdge>& edges);

struct DeltaRecord {
  std::size_t user = 0;
  Gender gender = Gender::female;
  double own = 0.0;
  double preferred = 0.0;     // mean partner value
  double delta = 0.0;         // preferred - own
  std::size_t partners = 0;   // partners that contributed a value
};

struct ExclusionCounts {
  std::size_t missing_own = 0;           // own value absent
  std::size_t no_partners = 0;           // no mating edge at all
  std::size_t partners_lack_value = 0;   // partners exist, none has the value
  std::size_t total() const { return missing_own + no_partners + partners_lack_value; }
};

struct PreferredDifferenceTable {
  std::string property;
  std::vector<DeltaRecord> records;  // in profile order
  ExclusionCounts excluded_female;
  ExclusionCounts excluded_male;

  std::vector<double> deltas(Gender g) const;
};

/// Preferred difference of every user whose own value is present and who has
/// at least one partner with the value present. Partners are a set: each
/// deduplicated edge counts once.
PreferredDifferenceTable preferred_difference_table(const ProfileTable& profiles,
                                                    const std::vector<MatingEdge>& edges,
                                                    const std::string& property);

/// One line of the comparison table. Statistics are absent when the gender has
/// no included users.
struct StatsRow {
  std::string property;
  std::optional<double> mu_m, mu_f, sigma_m, sigma_f;
  double rho = 0.0;
  std::size_t n_m = 0;
  std::size_t n_f = 0;
};

struct PropertySpec {
  std::string name;
  double bin_width = 1.0;
};

struct PropertyReport {
  StatsRow row;
  Histogram female;
  Histogram male;
  PreferredDifferenceTable table;
};

std::vector<PropertyReport> property_report(const ProfileTable& profiles,
                                            const std::vector<MatingEdge>& edges,
                                            const std::vector<PropertySpec>& properties,
                                            StdDevKind std_kind = StdDevKind::population);

/// Header `property,mu_m,mu_f,sigma_m,sigma_f,rho,n_m,n_f`; undefined
/// statistics are written as empty cells.
void write_report_csv(std::ostream& out, const std::vector<PropertyReport>& reports);

/// Writes report.csv plus hist_<property>_<gender>.{csv,json} into `dir`.
void write_report(const std::filesystem::path& dir, const std::vector<PropertyReport>& reports);

}  // namespace matecompat

#endif  // MATECOMPAT_ANALYTICS_HPP
