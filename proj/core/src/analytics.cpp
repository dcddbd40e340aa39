#include "matecompat/analytics.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <utility>

#include "matecompat/csv.hpp"
#include "matecompat/error.hpp"
#include "matecompat/format.hpp"

namespace matecompat {

const std::vector<std::string>& standard_properties() {
  static const std::vector<std::string> names{"age", "height", "education", "income"};
  return names;
}

ProfileTable::ProfileTable(std::vector<std::string> property_names)
    : names_(std::move(property_names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second)
      throw InvalidParameter("property names must be unique and non-empty");
  }
}

std::size_t ProfileTable::add(Profile profile) {
  if (profile.values.size() != names_.size())
    throw InvalidParameter("profile '" + profile.user_id + "' has the wrong number of properties");
  const std::size_t i = profiles_.size();
  if (!index_.emplace(profile.user_id, i).second)
    throw DataError("duplicate user_id '" + profile.user_id + "'");
  profiles_.push_back(std::move(profile));
  return i;
}

std::optional<std::size_t> ProfileTable::find(const std::string& user_id) const {
  auto it = index_.find(user_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ProfileTable::property_column(const std::string& name) const {
  for (std::size_t c = 0; c < names_.size(); ++c)
    if (names_[c] == name) return c;
  std::string known;
  for (const auto& n : names_) known += (known.empty() ? "" : ", ") + n;
  throw InvalidParameter("unknown property '" + name + "'; known properties: " + known);
}

std::size_t ProfileTable::count(Gender g) const {
  std::size_t n = 0;
  for (const auto& p : profiles_) n += p.gender == g ? 1 : 0;
  return n;
}

ProfileTable parse_profiles(std::istream& in, const std::string& source) {
  CsvReader reader(in, source);
  const auto header = reader.header();
  if (header.size() < 3 || header[0] != "user_id" || header[1] != "gender")
    reader.fail("header must start with 'user_id,gender' followed by property columns");

  std::vector<std::string> names(header.begin() + 2, header.end());
  ProfileTable table = [&] {
    try {
      return ProfileTable(names);
    } catch (const InvalidParameter& e) {
      reader.fail(e.what());
    }
  }();

  while (auto row = reader.next()) {
    Profile p;
    p.user_id = (*row)[0];
    if (p.user_id.empty()) reader.fail("empty user_id");
    const std::string& g = (*row)[1];
    if (g == "F") {
      p.gender = Gender::female;
    } else if (g == "M") {
      p.gender = Gender::male;
    } else {
      reader.fail("unknown gender code '" + g + "' for user '" + p.user_id + "' (expected F or M)");
    }
    for (std::size_t c = 2; c < row->size(); ++c) {
      if ((*row)[c].empty()) {
        p.values.emplace_back();
      } else {
        p.values.emplace_back(reader.number(*row, c));
      }
    }
    if (table.find(p.user_id)) reader.fail("duplicate user_id '" + p.user_id + "'");
    table.add(std::move(p));
  }
  return table;
}

ProfileTable load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return parse_profiles(in, path.string());
}

std::vector<MatingEdge> parse_matings(std::istream& in, const ProfileTable& profiles,
                                      const std::string& source) {
  CsvReader reader(in, source);
  reader.expect_header({"user_a", "user_b"});
  std::vector<MatingEdge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (auto row = reader.next()) {
    const std::string& a = (*row)[0];
    const std::string& b = (*row)[1];
    const auto ia = profiles.find(a);
    if (!ia) reader.fail("unknown user_id '" + a + "'");
    const auto ib = profiles.find(b);
    if (!ib) reader.fail("unknown user_id '" + b + "'");
    if (*ia == *ib) reader.fail("self-edge for user '" + a + "'");
    if (profiles[*ia].gender == profiles[*ib].gender)
      reader.fail("same-gender edge (" + a + ", " + b + ")");
    const bool a_female = profiles[*ia].gender == Gender::female;
    const std::size_t f = a_female ? *ia : *ib;
    const std::size_t m = a_female ? *ib : *ia;
    if (!seen.emplace(f, m).second) continue;
    edges.push_back({profiles[f].user_id, profiles[m].user_id, f, m});
  }
  return edges;
}

std::vector<MatingEdge> load_matings(const std::filesystem::path& path, const ProfileTable& profiles) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string(), 0, "cannot open file");
  return parse_matings(in, profiles, path.string());
}

void write_profiles_csv(std::ostream& out, const ProfileTable& profiles) {
  out << "user_id,gender";
  for (const auto& n : profiles.property_names()) out << ',' << n;
  out << '\n';
  for (const auto& p : profiles.profiles()) {
    out << p.user_id << ',' << (p.gender == Gender::female ? 'F' : 'M');
    for (const auto& v : p.values) {
      out << ',';
      if (v) out << fixed6(*v);
    }
    out << '\n';
  }
}

void write_matings_csv(std::ostream& out, const std::vector<MatingEdge>& edges) {
  out << "user_a,user_b\n";
  for (const auto& e : edges) out << e.female_id << ',' << e.male_id << '\n';
}

std::vector<double> PreferredDifferenceTable::deltas(Gender g) const {
  std::vector<double> out;
  for (const auto& r : records)
    if (r.gender == g) out.push_back(r.delta);
  return out;
}

PreferredDifferenceTable preferred_difference_table(const ProfileTable& profiles,
                                                    const std::vector<MatingEdge>& edges,
                                                    const std::string& property) {
  const std::size_t col = profiles.property_column(property);
  std::vector<std::vector<std::size_t>> partners(profiles.size());
  for (const auto& e : edges) {
    partners[e.female].push_back(e.male);
    partners[e.male].push_back(e.female);
  }

  PreferredDifferenceTable table;
  table.property = property;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const Profile& p = profiles[i];
    ExclusionCounts& excluded =
        p.gender == Gender::female ? table.excluded_female : table.excluded_male;
    const auto& own = p.values[col];
    if (!own) {
      ++excluded.missing_own;
      continue;
    }
    if (partners[i].empty()) {
      ++excluded.no_partners;
      continue;
    }
    double sum = 0.0;
    std::size_t used = 0;
    for (auto j : partners[i]) {
      if (const auto& v = profiles[j].values[col]) {
        sum += *v;
        ++used;
      }
    }
    if (used == 0) {
      ++excluded.partners_lack_value;
      continue;
    }
    const double preferred = sum / static_cast<double>(used);
    table.records.push_back({i, p.gender, *own, preferred, preferred - *own, used});
  }
  return table;
}

std::vector<PropertyReport> property_report(const ProfileTable& profiles,
                                            const std::vector<MatingEdge>& edges,
                                            const std::vector<PropertySpec>& properties,
                                            StdDevKind std_kind) {
  std::vector<PropertyReport> reports;
  reports.reserve(properties.size());
  for (const auto& spec : properties) {
    PropertyReport rep;
    rep.table = preferred_difference_table(profiles, edges, spec.name);
    const auto fd = rep.table.deltas(Gender::female);
    const auto md = rep.table.deltas(Gender::male);
    const auto fs = summary_stats(fd, std_kind);
    const auto ms = summary_stats(md, std_kind);
    rep.female = build_histogram(fd, spec.bin_width);
    rep.male = build_histogram(md, spec.bin_width);

    rep.row.property = spec.name;
    rep.row.mu_f = fs.mean;
    rep.row.sigma_f = fs.std;
    rep.row.mu_m = ms.mean;
    rep.row.sigma_m = ms.std;
    rep.row.n_f = fs.n;
    rep.row.n_m = ms.n;
    rep.row.rho = compatibility(rep.female, rep.male);
    reports.push_back(std::move(rep));
  }
  return reports;
}

void write_report_csv(std::ostream& out, const std::vector<PropertyReport>& reports) {
  const auto cell = [](const std::optional<double>& v) { return v ? fixed6(*v) : std::string(); };
  out << "property,mu_m,mu_f,sigma_m,sigma_f,rho,n_m,n_f\n";
  for (const auto& r : reports) {
    const auto& row = r.row;
    out << row.property << ',' << cell(row.mu_m) << ',' << cell(row.mu_f) << ','
        << cell(row.sigma_m) << ',' << cell(row.sigma_f) << ',' << fixed6(row.rho) << ','
        << row.n_m << ',' << row.n_f << '\n';
  }
}

void write_report(const std::filesystem::path& dir, const std::vector<PropertyReport>& reports) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError(dir.string(), 0, "cannot create output directory: " + ec.message());

  const auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError(path.string(), 0, "cannot open for writing");
    return out;
  };
  {
    auto out = open(dir / "report.csv");
    write_report_csv(out, reports);
  }
  for (const auto& r : reports) {
    for (const auto& [gender, hist] : {std::pair{"female", &r.female}, std::pair{"male", &r.male}}) {
      const std::string stem = "hist_" + r.row.property + "_" + gender;
      auto csv = open(dir / (stem + ".csv"));
      write_csv(csv, *hist);
      auto json = open(dir / (stem + ".json"));
      json << to_json(*hist);
    }
  }
}

}  // namespace matecompat
