#ifndef MATECOMPAT_RUNNER_HPP
#define MATECOMPAT_RUNNER_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matecompat/model.hpp"

namespace matecompat {

enum class TerminalStatus { converged, extinct, max_generations_reached };
const char* to_string(TerminalStatus s);

struct GenerationRecord {
  int generation = 0;
  double rho = 0.0;
  std::size_t variety = 0;
  std::size_t n_females = 0;
  std::size_t n_males = 0;
  std::size_t matings = 0;
};

/// Time series of one realization. Each record describes the population alive
/// in that generation and the meetings it held.
struct RealizationTrace {
  std::uint64_t seed = 0;
  std::vector<GenerationRecord> records;
  TerminalStatus status = TerminalStatus::max_generations_reached;
  int terminal_generation = 0;
  /// Distinct genotypes alive in the terminal generation, by gender.
  std::size_t final_female_genotypes = 0;
  std::size_t final_male_genotypes = 0;
};

struct RunOptions {
  double convergence_threshold = 0.999;
  double bin_width = 1.0;

  void validate() const;
};

/// Called after every generation with the parent population, the result of
/// its meetings and the record that was appended. Used by tests and tools
/// that need the full state; may be empty.
using GenerationObserver =
    std::function<void(const Population&, const GenerationResult&, const GenerationRecord&)>;

/// Runs generations until rho >= threshold (converged), a gender dies out
/// (extinct), or params.max_generations generations have run. Convergence is
/// checked before extinction for the same generation. Fully determined by
/// params.seed.
RealizationTrace run_realization(const SimParams& params, const RunOptions& options = {},
                                 const GenerationObserver& observer = {});

struct EnsembleSummary {
  std::size_t n_realizations = 0;
  std::size_t n_converged = 0;
  std::size_t n_extinct = 0;
  std::size_t n_max_generations = 0;
  double extinction_fraction = 0.0;
  double convergence_fraction = 0.0;
  std::optional<double> median_generations_to_convergence;
};

struct EnsembleResult {
  std::vector<RealizationTrace> traces;  // sorted by seed
  EnsembleSummary summary;
};

EnsembleSummary summarize(std::span<const RealizationTrace> traces);

/// One realization per seed on up to `parallelism` worker threads. Output does
/// not depend on the worker count. Throws InvalidParameter on duplicate seeds.
EnsembleResult run_ensemble(const SimParams& params, std::span<const std::uint64_t> seeds,
                            std::size_t parallelism = 1, const RunOptions& options = {});

/// Parses "7", "1..50" (inclusive), or comma-separated mixes such as "1..3,9".
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

/// base, base + 1, ..., base + count - 1.
std::vector<std::uint64_t> seeds_from_base(std::uint64_t base, std::size_t count);

// Output formats.
void write_trace_csv(std::ostream& out, const RealizationTrace& trace);
std::string trace_filename(std::uint64_t seed);
std::string summary_json(const EnsembleResult& result, const SimParams& params,
                         const RunOptions& options);
/// Writes every trace CSV plus summary.json into `dir` (created if needed).
void write_ensemble(const std::filesystem::path& dir, const EnsembleResult& result,
                    const SimParams& params, const RunOptions& options);

}  // namespace matecompat

#endif  // MATECOMPAT_RUNNER_HPP
