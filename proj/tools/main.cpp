#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "matecompat/error.hpp"

using namespace matecompat;

int main(int argc, char** argv) {
  CLI::App app{"Mate-choice compatibility: evolutionary simulation and preferred-difference analytics"};
  app.name("matecompat");
  app.require_subcommand(1);

  // simulate
  cli::SimulateConfig sim;
  std::string seeds_text;
  std::uint64_t base_seed = 0;
  std::size_t realizations = 0;
  auto* simulate = app.add_subcommand("simulate", "Run seeded realizations of the evolutionary model");
  simulate->add_option("--n", sim.params.population_cap, "Per-gender population cap N")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--r", sim.params.value_range, "Property value range R")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--m", sim.params.meetings, "Meetings per generation M")->check(CLI::NonNegativeNumber)->capture_default_str();
  simulate->add_option("--max-generations", sim.params.max_generations)->check(CLI::PositiveNumber)->capture_default_str();
  auto* seeds_opt = simulate->add_option("--seeds", seeds_text, "Seeds: 7, 1..50 (inclusive) or 1,4,9");
  auto* base_opt = simulate->add_option("--base-seed", base_seed, "First seed of base + 0..K-1");
  auto* count_opt = simulate->add_option("--realizations", realizations, "K for --base-seed");
  base_opt->needs(count_opt);
  count_opt->needs(base_opt);
  seeds_opt->excludes(base_opt);
  simulate->add_option("--threshold", sim.options.convergence_threshold, "Convergence threshold on rho")
      ->check(CLI::Range(1e-12, 1.0))
      ->capture_default_str();
  simulate->add_option("--bin-width", sim.options.bin_width, "Histogram bin width")
      ->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--parallelism", sim.parallelism, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  simulate->add_option("--out", sim.out, "Output directory")->capture_default_str();

  // analyze
  cli::AnalyzeConfig analyze_cfg;
  std::vector<std::string> bin_width_entries;
  std::string std_kind = "population";
  auto* analyze = app.add_subcommand("analyze", "Preferred-difference report from profile and mating files");
  analyze->add_option("--profiles", analyze_cfg.profiles, "Profiles CSV")->required()->check(CLI::ExistingFile);
  analyze->add_option("--matings", analyze_cfg.matings, "Matings CSV")->required()->check(CLI::ExistingFile);
  analyze->add_option("--properties", analyze_cfg.properties, "Properties to report")
      ->delimiter(',')
      ->capture_default_str();
  analyze->add_option("--bin-width", bin_width_entries, "Per-property bin width, name=width (default 1)")
      ->delimiter(',');
  analyze->add_option("--std", std_kind, "Standard deviation estimator")
      ->check(CLI::IsMember({"population", "sample"}))
      ->capture_default_str();
  analyze->add_option("--out", analyze_cfg.out, "Output directory")->capture_default_str();

  // compat
  cli::CompatConfig compat_cfg;
  auto* compat = app.add_subcommand("compat", "Compatibility rho of a female and a male histogram file");
  compat->add_option("female", compat_cfg.female_path, "Female histogram (.json or .csv)")
      ->required()
      ->check(CLI::ExistingFile);
  compat->add_option("male", compat_cfg.male_path, "Male histogram (.json or .csv)")
      ->required()
      ->check(CLI::ExistingFile);
  compat->add_option("--bin-width", compat_cfg.csv_bin_width, "Bin width for CSV histograms")->check(CLI::PositiveNumber);

  auto* demo = app.add_subcommand("demo", "Walk through a three-bin compatibility example");

  // synthesize
  cli::SynthesizeConfig syn;
  auto* synthesize = app.add_subcommand("synthesize", "Write a synthetic dataset with known preferred differences");
  synthesize->add_option("--n-users", syn.n_users)->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))->capture_default_str();
  synthesize->add_option("--property", syn.property.name)->capture_default_str();
  synthesize->add_option("--female-mean", syn.property.female.mean)->capture_default_str();
  synthesize->add_option("--female-std", syn.property.female.stddev)->capture_default_str();
  synthesize->add_option("--male-mean", syn.property.male.mean)->capture_default_str();
  synthesize->add_option("--male-std", syn.property.male.stddev)->capture_default_str();
  synthesize->add_option("--base-mean", syn.property.base_mean)->capture_default_str();
  synthesize->add_option("--base-std", syn.property.base_std)->capture_default_str();
  synthesize->add_option("--leaves-per-hub", syn.leaves_per_hub)->check(CLI::PositiveNumber)->capture_default_str();
  synthesize->add_option("--seed", syn.seed)->capture_default_str();
  synthesize->add_option("--out", syn.out)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      if (!seeds_text.empty()) {
        try {
          sim.seeds = parse_seed_list(seeds_text);
        } catch (const InvalidParameter& e) {
          throw InvalidParameter(std::string("--seeds: ") + e.what());
        }
      } else if (*base_opt) {
        sim.seeds = seeds_from_base(base_seed, realizations);
      }
      sim.params.validate();
      sim.options.validate();
      return cli::cmd_simulate(sim, std::cout);
    }
    if (analyze->parsed()) {
      analyze_cfg.bin_widths = cli::parse_bin_widths(bin_width_entries);
      analyze_cfg.std_kind = std_kind == "sample" ? StdDevKind::sample : StdDevKind::population;
      return cli::cmd_analyze(analyze_cfg, std::cout);
    }
    if (compat->parsed()) return cli::cmd_compat(compat_cfg, std::cout);
    if (demo->parsed()) return cli::cmd_demo(std::cout);
    if (synthesize->parsed()) return cli::cmd_synthesize(syn, std::cout);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands())
      std::cerr << "usage: " << app.get_name() << " " << sub->get_name() << " [OPTIONS]; see --help\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
