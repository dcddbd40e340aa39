// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "matecompat/histogram.hpp"
#include "matecompat/model.hpp"
#include "matecompat/runner.hpp"
#include "matecompat/synthetic.hpp"
#include "oracles.hpp"

using namespace matecompat;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("AC%d %s  %s  [%s] (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", name.c_str(),
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

SimParams reference_params(int max_generations) {
  SimParams p;
  p.population_cap = 100;
  p.value_range = 9;
  p.meetings = 20000;
  p.max_generations = max_generations;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Traces collected by AC3 and AC4, reused by AC6.
std::vector<RealizationTrace> collected;

}  // namespace

int main() {
  criterion(1, "three-bin compatibility example equals 0.90 within 1e-12", [] {
    const Histogram f{1.0, {{-1, 0.30}, {0, 0.50}, {1, 0.20}}, 10};
    const Histogram m{1.0, {{-1, 0.10}, {0, 0.60}, {1, 0.30}}, 10};
    const double rho = compatibility(f, m);
    return Outcome{std::abs(rho - 0.90) <= 1e-12, fmt("rho=%.15f", rho)};
  });

  criterion(2, "agreement example: male (1,5,2,5) accepts female (0,2,6,8), not vice versa", [] {
    const Genotype male{Gender::male, 5, 2, 5};
    const Genotype female{Gender::female, 2, 6, 8};
    const bool a = agrees(male, female);
    const bool b = agrees(female, male);
    return Outcome{a && !b, std::string("male->female=") + (a ? "true" : "false") +
                                " female->male=" + (b ? "true" : "false")};
  });

  criterion(3, "N=100 R=9 M=20000, 50 seeds: >=60% reach rho>=0.99 within 200 generations, <50% extinct", [] {
    const auto seeds = parse_seed_list("1..50");
    const auto res = run_ensemble(reference_params(200), seeds, 8, {0.99, 1.0});
    collected.insert(collected.end(), res.traces.begin(), res.traces.end());
    const auto& s = res.summary;
    std::string detail = "converged=" + fmt("%.2f", s.convergence_fraction) +
                         " extinct=" + fmt("%.2f", s.extinction_fraction) +
                         " max_generations=" + std::to_string(s.n_max_generations) + "/50";
    if (s.median_generations_to_convergence)
      detail += " median_generations=" + fmt("%.1f", *s.median_generations_to_convergence);
    return Outcome{s.convergence_fraction >= 0.60 && s.extinction_fraction < 0.5, detail};
  });

  criterion(4, "model invariants over 20 seeds x full runs (N=100 R=9 M=20000)", [] {
    const SimParams base = reference_params(1000);
    std::size_t violations = 0, generations = 0;
    for (std::uint64_t seed = 1001; seed <= 1020; ++seed) {
      SimParams p = base;
      p.seed = seed;
      std::size_t last_variety = SIZE_MAX;
      auto trace = run_realization(p, {0.999, 1.0}, [&](const Population& pop, const GenerationResult& gen,
                                                       const GenerationRecord& rec) {
        ++generations;
        if (rec.variety > last_variety) ++violations;
        last_variety = rec.variety;
        if (gen.variety > rec.variety) ++violations;
        for (const auto& g : pop.females)
          if (g.gender != Gender::female || !respects_invariants(g, p.value_range)) ++violations;
        for (const auto& g : pop.males)
          if (g.gender != Gender::male || !respects_invariants(g, p.value_range)) ++violations;
        const std::set<Genotype> fset(pop.females.begin(), pop.females.end());
        const std::set<Genotype> mset(pop.males.begin(), pop.males.end());
        for (const auto& c : gen.children.females)
          if (!fset.contains(c) || !respects_invariants(c, p.value_range)) ++violations;
        for (const auto& c : gen.children.males)
          if (!mset.contains(c) || !respects_invariants(c, p.value_range)) ++violations;
        if (gen.children.females.size() > 100 || gen.children.males.size() > 100) ++violations;
        if (pop.females.size() > 100 || pop.males.size() > 100) ++violations;
      });
      collected.push_back(std::move(trace));
    }
    return Outcome{violations == 0, "violations=" + std::to_string(violations) +
                                        " generations_checked=" + std::to_string(generations)};
  });

  criterion(5, "rho properties on 1000 random histogram pairs (bounds, symmetry, mirror, oracle)", [] {
    std::mt19937_64 gen(20240601);
    std::uniform_int_distribution<int> nbins(1, 20), index(-15, 15), count(1, 1000);
    std::normal_distribution<double> spread(0.0, 4.0);
    const auto random_hist = [&] {
      std::vector<double> values;
      const int k = nbins(gen);
      for (int b = 0; b < k; ++b) {
        const int idx = index(gen);
        const int c = count(gen);
        for (int i = 0; i < c; ++i) values.push_back(idx);
      }
      return build_histogram(values, 1.0);
    };
    int bad = 0;
    double worst_sym = 0.0, worst_oracle = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto f = random_hist();
      const auto m = random_hist();
      const double rho = compatibility(f, m);
      if (rho < 0.0 || rho > 1.0) ++bad;
      worst_sym = std::max(worst_sym, std::abs(rho - compatibility(m, f)));
      worst_oracle = std::max(worst_oracle, std::abs(rho - oracle::brute_force_rho(f.bins, m.bins)));
      if (compatibility(f, mirror(f)) != 1.0) ++bad;
    }
    const bool ok = bad == 0 && worst_sym <= 1e-12 && worst_oracle <= 1e-12;
    return Outcome{ok, "bound/mirror failures=" + std::to_string(bad) + " max|sym|=" + fmt("%.2e", worst_sym) +
                           " max|oracle|=" + fmt("%.2e", worst_oracle)};
  });

  criterion(6, "single-genotype endgame: converged runs ending at variety 2 with matings have rho = 1", [] {
    int cases = 0, bad = 0;
    for (const auto& t : collected) {
      if (t.status != TerminalStatus::converged) continue;
      const auto& last = t.records.back();
      if (last.variety != 2 || last.matings == 0) continue;
      ++cases;
      if (last.rho != 1.0) ++bad;
    }
    return Outcome{bad == 0, "qualifying runs=" + std::to_string(cases) + " of " +
                                 std::to_string(collected.size()) + ", violations=" + std::to_string(bad)};
  });

  criterion(7, "pipeline recovers injected age moments (+2.74/5.23 F, -2.90/5.06 M, n=10000/gender)", [] {
    const fs::path dir = fs::temp_directory_path() / "matecompat_acceptance_synth";
    fs::remove_all(dir);
    std::ostringstream sink;
    cli::SynthesizeConfig syn;
    syn.property = {"age", {2.74, 5.23}, {-2.90, 5.06}, 30.0, 5.0};
    syn.n_users = 20000;
    syn.seed = 7;
    syn.out = dir;
    cli::cmd_synthesize(syn, sink);

    cli::AnalyzeConfig cfg;
    cfg.profiles = dir / "profiles.csv";
    cfg.matings = dir / "matings.csv";
    cfg.properties = {"age"};
    cfg.out = dir / "report";
    cli::cmd_analyze(cfg, sink);

    const auto profiles = load_profiles(cfg.profiles);
    const auto edges = load_matings(cfg.matings, profiles);
    const auto rep = property_report(profiles, edges, {{"age", 1.0}}).at(0).row;
    fs::remove_all(dir);

    const double mf = *rep.mu_f, mm = *rep.mu_m, sf = *rep.sigma_f, sm = *rep.sigma_m;
    const bool ok = std::abs(mf - 2.74) <= 0.2 && std::abs(mm + 2.90) <= 0.2 && std::abs(sf - 5.23) <= 0.2 &&
                    std::abs(sm - 5.06) <= 0.2 && mf > 0.0 && mm < 0.0 && rep.n_f == 10000 &&
                    rep.n_m == 10000;
    return Outcome{ok, "mu_f=" + fmt("%.3f", mf) + " mu_m=" + fmt("%.3f", mm) + " sigma_f=" + fmt("%.3f", sf) +
                           " sigma_m=" + fmt("%.3f", sm) + " rho=" + fmt("%.3f", rep.rho)};
  });

  criterion(8, "identical seeds with parallelism 1 vs 8 give byte-identical trace files", [] {
    const fs::path a = fs::temp_directory_path() / "matecompat_acceptance_p1";
    const fs::path b = fs::temp_directory_path() / "matecompat_acceptance_p8";
    fs::remove_all(a);
    fs::remove_all(b);
    const SimParams params = reference_params(200);
    const RunOptions options{0.999, 1.0};
    const auto seeds = parse_seed_list("1..16");
    write_ensemble(a, run_ensemble(params, seeds, 1, options), params, options);
    write_ensemble(b, run_ensemble(params, seeds, 8, options), params, options);
    int files = 0, differing = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      ++files;
      const auto other = b / entry.path().filename();
      if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) ++differing;
    }
    const bool same_count =
        std::distance(fs::directory_iterator(b), fs::directory_iterator{}) == files;
    fs::remove_all(a);
    fs::remove_all(b);
    return Outcome{differing == 0 && same_count && files == 17,
                   "files compared=" + std::to_string(files) + " differing=" + std::to_string(differing)};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
