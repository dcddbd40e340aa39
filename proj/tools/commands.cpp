#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "matecompat/csv.hpp"
#include "matecompat/error.hpp"
#include "matecompat/format.hpp"
#include "matecompat/histogram.hpp"

namespace matecompat::cli {

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError(path.string(), 0, "cannot open for writing");
  return out;
}

}  // namespace

std::map<std::string, double> parse_bin_widths(const std::vector<std::string>& entries) {
  std::map<std::string, double> widths;
  for (const auto& e : entries) {
    const auto eq = e.find('=');
    const auto w = eq == std::string::npos ? std::nullopt : parse_double(e.substr(eq + 1));
    if (!w || eq == 0 || !(*w > 0.0))
      throw InvalidParameter("--bin-width expects name=positive_width, got '" + e + "'");
    widths[e.substr(0, eq)] = *w;
  }
  return widths;
}

int cmd_simulate(const SimulateConfig& config, std::ostream& out) {
  const auto result =
      run_ensemble(config.params, config.seeds, config.parallelism, config.options);
  write_ensemble(config.out, result, config.params, config.options);
  for (const auto& t : result.traces) {
    const auto& last = t.records.back();
    out << "seed " << t.seed << ": " << to_string(t.status) << " at generation "
        << t.terminal_generation << ", rho " << fixed6(last.rho) << ", variety " << last.variety
        << '\n';
  }
  const auto& s = result.summary;
  out << s.n_realizations << " realizations: " << s.n_converged << " converged, " << s.n_extinct
      << " extinct, " << s.n_max_generations << " hit max generations; output in "
      << config.out.string() << '\n';
  return 0;
}

int cmd_analyze(const AnalyzeConfig& config, std::ostream& out) {
  const ProfileTable profiles = load_profiles(config.profiles);
  const auto edges = load_matings(config.matings, profiles);

  std::vector<PropertySpec> specs;
  for (const auto& name : config.properties) {
    profiles.property_column(name);  // validates the name
    auto it = config.bin_widths.find(name);
    specs.push_back({name, it == config.bin_widths.end() ? 1.0 : it->second});
  }
  for (const auto& [name, width] : config.bin_widths) {
    if (std::find(config.properties.begin(), config.properties.end(), name) == config.properties.end())
      throw InvalidParameter("--bin-width given for '" + name + "', which is not being analyzed");
  }

  const auto reports = property_report(profiles, edges, specs, config.std_kind);
  write_report(config.out, reports);
  write_report_csv(out, reports);
  for (const auto& r : reports) {
    const auto& ef = r.table.excluded_female;
    const auto& em = r.table.excluded_male;
    out << "# " << r.row.property << ": excluded " << ef.total() << " female / " << em.total()
        << " male users\n";
  }
  return 0;
}

int cmd_compat(const CompatConfig& config, std::ostream& out) {
  const Histogram f = load_histogram(config.female_path, config.csv_bin_width);
  const Histogram m = load_histogram(config.male_path, config.csv_bin_width);
  out << fixed6(compatibility(f, m)) << '\n';
  return 0;
}

int cmd_demo(std::ostream& out) {
  Histogram f{1.0, {{-1, 0.30}, {0, 0.50}, {1, 0.20}}, 10};
  Histogram m{1.0, {{-1, 0.10}, {0, 0.60}, {1, 0.30}}, 10};

  out << "Preferred-difference distributions over dp in {-1, 0, +1}, equal group sizes.\n";
  out << "  women f(x): f(-1) = 0.30, f(0) = 0.50, f(+1) = 0.20\n";
  out << "  men   m(x): m(-1) = 0.10, m(0) = 0.60, m(+1) = 0.30\n";
  out << "A woman preferring dp = x matches a man preferring dp = -x.\n";

  const auto terms = compatibility_terms(f, m);
  const auto term = [&terms](std::int64_t k) {
    auto it = terms.find(k);
    return it == terms.end() ? 0.0 : it->second;
  };
  const auto signed_x = [](std::int64_t k) { return k > 0 ? "+" + std::to_string(k) : std::to_string(k); };
  for (std::int64_t k : {0, 1, -1}) {
    out << "  x = " << signed_x(k) << ": min(f(" << signed_x(k) << ") = " << fixed2(f.mass(k))
        << ", m(" << signed_x(-k) << ") = " << fixed2(m.mass(-k)) << ") = " << fixed2(term(k))
        << '\n';
  }
  out << "rho = " << fixed2(compatibility(f, m)) << '\n';
  return 0;
}

int cmd_synthesize(const SynthesizeConfig& config, std::ostream& out) {
  SyntheticSpec spec;
  spec.properties.push_back(config.property);
  spec.leaves_per_hub = config.leaves_per_hub;
  Rng rng(config.seed);
  const auto data = generate_synthetic(spec, config.n_users, rng);

  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) throw DataError(config.out.string(), 0, "cannot create output directory: " + ec.message());
  {
    auto f = open_output(config.out / "profiles.csv");
    write_profiles_csv(f, data.profiles);
  }
  {
    auto f = open_output(config.out / "matings.csv");
    write_matings_csv(f, data.edges);
  }
  {
    auto f = open_output(config.out / "ground_truth.csv");
    const auto& truth = data.ground_truth.at(config.property.name);
    f << "user_id,gender,delta\n";
    for (std::size_t i = 0; i < data.profiles.size(); ++i) {
      const auto& p = data.profiles[i];
      f << p.user_id << ',' << (p.gender == Gender::female ? 'F' : 'M') << ','
        << (truth[i] ? fixed6(*truth[i]) : std::string()) << '\n';
    }
  }
  out << "wrote " << data.profiles.size() << " profiles and " << data.edges.size()
      << " matings to " << config.out.string() << '\n';
  return 0;
}

}  // namespace matecompat::cli
