#include "matecompat/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include <json.hpp>

#include "matecompat/error.hpp"
#include "matecompat/format.hpp"
#include "matecompat/preferred_difference.hpp"

namespace matecompat {

const char* to_string(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::converged: return "converged";
    case TerminalStatus::extinct: return "extinct";
    case TerminalStatus::max_generations_reached: return "max_generations_reached";
  }
  return "unknown";
}

void RunOptions::validate() const {
  if (!(convergence_threshold > 0.0 && convergence_threshold <= 1.0))
    throw InvalidParameter("convergence threshold must lie in (0, 1]");
  if (!(bin_width > 0.0)) throw InvalidParameter("bin width must be positive");
}

namespace {

double round6(double v) { return std::round(v * 1e6) / 1e6; }

std::size_t distinct(const std::vector<Genotype>& agents) {
  return std::set<Genotype>(agents.begin(), agents.end()).size();
}

}  // namespace

RealizationTrace run_realization(const SimParams& params, const RunOptions& options,
                                 const GenerationObserver& observer) {
  params.validate();
  options.validate();

  RealizationTrace trace;
  trace.seed = params.seed;
  Rng rng(params.seed);
  Population pop = init_population(params, rng);

  for (int t = 0;; ++t) {
    GenerationResult gen = advance_generation(pop, params, rng);
    GenerationRecord rec;
    rec.generation = t;
    rec.rho = generation_compatibility(gen.mating_log, pop, options.bin_width);
    rec.variety = genotype_variety(pop);
    rec.n_females = pop.females.size();
    rec.n_males = pop.males.size();
    rec.matings = gen.mating_log.size();
    trace.records.push_back(rec);
    if (observer) observer(pop, gen, rec);

    bool stop = true;
    if (rec.rho >= options.convergence_threshold) {
      trace.status = TerminalStatus::converged;
    } else if (gen.extinct) {
      trace.status = TerminalStatus::extinct;
    } else if (t + 1 >= params.max_generations) {
      trace.status = TerminalStatus::max_generations_reached;
    } else {
      stop = false;
    }
    if (stop) {
      trace.terminal_generation = t;
      trace.final_female_genotypes = distinct(pop.females);
      trace.final_male_genotypes = distinct(pop.males);
      return trace;
    }
    pop = std::move(gen.children);
  }
}

EnsembleSummary summarize(std::span<const RealizationTrace> traces) {
  EnsembleSummary s;
  s.n_realizations = traces.size();
  std::vector<int> converged_at;
  for (const auto& t : traces) {
    switch (t.status) {
      case TerminalStatus::converged:
        ++s.n_converged;
        converged_at.push_back(t.terminal_generation);
        break;
      case TerminalStatus::extinct: ++s.n_extinct; break;
      case TerminalStatus::max_generations_reached: ++s.n_max_generations; break;
    }
  }
  if (s.n_realizations > 0) {
    const auto n = static_cast<double>(s.n_realizations);
    s.extinction_fraction = static_cast<double>(s.n_extinct) / n;
    s.convergence_fraction = static_cast<double>(s.n_converged) / n;
  }
  if (!converged_at.empty()) {
    std::sort(converged_at.begin(), converged_at.end());
    const std::size_t mid = converged_at.size() / 2;
    s.median_generations_to_convergence =
        converged_at.size() % 2 == 1 ? converged_at[mid]
                                     : 0.5 * (converged_at[mid - 1] + converged_at[mid]);
  }
  return s;
}

EnsembleResult run_ensemble(const SimParams& params, std::span<const std::uint64_t> seeds,
                            std::size_t parallelism, const RunOptions& options) {
  params.validate();
  options.validate();
  std::vector<std::uint64_t> ordered(seeds.begin(), seeds.end());
  std::sort(ordered.begin(), ordered.end());
  if (auto dup = std::adjacent_find(ordered.begin(), ordered.end()); dup != ordered.end())
    throw InvalidParameter("duplicate seed " + std::to_string(*dup) + " in ensemble");

  EnsembleResult result;
  result.traces.resize(ordered.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  const auto work = [&] {
    for (std::size_t i = next++; i < ordered.size(); i = next++) {
      try {
        SimParams p = params;
        p.seed = ordered[i];
        result.traces[i] = run_realization(p, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(parallelism, 1, std::max<std::size_t>(ordered.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  result.summary = summarize(result.traces);
  return result;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  const auto parse_one = [&text](const std::string& tok) -> std::uint64_t {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidParameter("invalid seed list '" + text + "'");
    try {
      return std::stoull(tok);
    } catch (const std::exception&) {
      throw InvalidParameter("seed out of range in '" + text + "'");
    }
  };

  std::vector<std::uint64_t> seeds;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string tok = text.substr(start, comma - start);
    if (auto dots = tok.find(".."); dots != std::string::npos) {
      const auto lo = parse_one(tok.substr(0, dots));
      const auto hi = parse_one(tok.substr(dots + 2));
      if (hi < lo) throw InvalidParameter("empty seed range '" + tok + "'");
      if (hi - lo >= 10'000'000) throw InvalidParameter("seed range '" + tok + "' is too large");
      for (auto s = lo;; ++s) {
        seeds.push_back(s);
        if (s == hi) break;
      }
    } else {
      seeds.push_back(parse_one(tok));
    }
    start = comma + 1;
  }
  return seeds;
}

std::vector<std::uint64_t> seeds_from_base(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) seeds[i] = base + i;
  return seeds;
}

void write_trace_csv(std::ostream& out, const RealizationTrace& trace) {
  out << "generation,rho,variety,n_females,n_males,matings\n";
  for (const auto& r : trace.records) {
    out << r.generation << ',' << fixed6(r.rho) << ',' << r.variety << ',' << r.n_females << ','
        << r.n_males << ',' << r.matings << '\n';
  }
}

std::string trace_filename(std::uint64_t seed) { return "trace_seed_" + std::to_string(seed) + ".csv"; }

std::string summary_json(const EnsembleResult& result, const SimParams& params,
                         const RunOptions& options) {
  using nlohmann::ordered_json;
  const auto& s = result.summary;
  ordered_json j;
  j["params"] = {{"N", params.population_cap},
                 {"R", params.value_range},
                 {"M", params.meetings},
                 {"max_generations", params.max_generations},
                 {"convergence_threshold", round6(options.convergence_threshold)},
                 {"bin_width", round6(options.bin_width)}};
  j["n_realizations"] = s.n_realizations;
  j["n_converged"] = s.n_converged;
  j["n_extinct"] = s.n_extinct;
  j["n_max_generations_reached"] = s.n_max_generations;
  j["extinction_fraction"] = round6(s.extinction_fraction);
  j["convergence_fraction"] = round6(s.convergence_fraction);
  j["median_generations_to_convergence"] =
      s.median_generations_to_convergence ? ordered_json(round6(*s.median_generations_to_convergence))
                                          : ordered_json(nullptr);
  ordered_json runs = ordered_json::array();
  for (const auto& t : result.traces) {
    runs.push_back({{"seed", t.seed},
                    {"status", to_string(t.status)},
                    {"terminal_generation", t.terminal_generation},
                    {"final_rho", round6(t.records.empty() ? 0.0 : t.records.back().rho)},
                    {"final_variety", t.records.empty() ? 0 : t.records.back().variety}});
  }
  j["realizations"] = std::move(runs);
  return j.dump(2) + "\n";
}

void write_ensemble(const std::filesystem::path& dir, const EnsembleResult& result,
                    const SimParams& params, const RunOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError(dir.string(), 0, "cannot create output directory: " + ec.message());
  for (const auto& t : result.traces) {
    const auto path = dir / trace_filename(t.seed);
    std::ofstream out(path);
    if (!out) throw DataError(path.string(), 0, "cannot open for writing");
    write_trace_csv(out, t);
  }
  const auto path = dir / "summary.json";
  std::ofstream out(path);
  if (!out) throw DataError(path.string(), 0, "cannot open for writing");
  out << summary_json(result, params, options);
}

}  // namespace matecompat
