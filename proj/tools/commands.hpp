#ifndef MATECOMPAT_TOOLS_COMMANDS_HPP
#define MATECOMPAT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "matecompat/analytics.hpp"
#include "matecompat/model.hpp"
#include "matecompat/runner.hpp"
#include "matecompat/stats.hpp"
#include "matecompat/synthetic.hpp"

namespace matecompat::cli {

struct SimulateConfig {
  SimParams params;
  RunOptions options;
  std::vector<std::uint64_t> seeds{1};
  std::size_t parallelism = 1;
  std::filesystem::path out = "out";
};

struct AnalyzeConfig {
  std::filesystem::path profiles;
  std::filesystem::path matings;
  std::vector<std::string> properties = standard_properties();
  std::map<std::string, double> bin_widths;  // missing entries default to 1
  StdDevKind std_kind = StdDevKind::population;
  std::filesystem::path out = "out";
};

struct CompatConfig {
  std::string female_path;
  std::string male_path;
  double csv_bin_width = 0.0;
};

struct SynthesizeConfig {
  SyntheticProperty property{"age", {2.74, 5.23}, {-2.90, 5.06}, 30.0, 5.0};
  std::size_t n_users = 20000;
  std::size_t leaves_per_hub = 49;
  std::uint64_t seed = 1;
  std::filesystem::path out = "out";
};

// Each command returns the process exit status. Library errors propagate as
// exceptions; main() turns them into messages and a non-zero status.
int cmd_simulate(const SimulateConfig& config, std::ostream& out);
int cmd_analyze(const AnalyzeConfig& config, std::ostream& out);
int cmd_compat(const CompatConfig& config, std::ostream& out);
int cmd_demo(std::ostream& out);
int cmd_synthesize(const SynthesizeConfig& config, std::ostream& out);

/// Parses "name=width" entries.
std::map<std::string, double> parse_bin_widths(const std::vector<std::string>& entries);

}  // namespace matecompat::cli

#endif  // MATECOMPAT_TOOLS_COMMANDS_HPP
