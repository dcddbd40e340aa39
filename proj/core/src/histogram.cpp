#include "matecompat/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "matecompat/csv.hpp"
#include "matecompat/error.hpp"
#include "matecompat/format.hpp"

namespace matecompat {

namespace {

void check_width(double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width))
    throw InvalidParameter("bin width must be a positive finite number, got " +
                           std::to_string(bin_width));
}

void check_masses(const Histogram& h, const std::string& source) {
  double sum = 0.0;
  for (const auto& [k, m] : h.bins) {
    if (!std::isfinite(m) || m < 0.0)
      throw DataError(source, 0, "bin " + std::to_string(k) + " has invalid mass");
    sum += m;
  }
  if (!h.bins.empty() && std::abs(sum - 1.0) > 1e-6)
    throw DataError(source, 0, "masses sum to " + std::to_string(sum) + ", expected 1");
}

}  // namespace

std::int64_t bin_index(double value, double bin_width) {
  // std::llround rounds halves away from zero.
  return std::llround(value / bin_width);
}

Histogram build_histogram(std::span<const double> values, double bin_width) {
  check_width(bin_width);
  Histogram h;
  h.bin_width = bin_width;
  h.total_count = values.size();
  if (values.empty()) return h;

  std::map<std::int64_t, std::size_t> counts;
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidParameter("build_histogram: non-finite value");
    ++counts[bin_index(v, bin_width)];
  }
  const auto n = static_cast<double>(values.size());
  for (const auto& [k, c] : counts) h.bins.emplace(k, static_cast<double>(c) / n);
  return h;
}

Histogram mirror(const Histogram& h) {
  Histogram out;
  out.bin_width = h.bin_width;
  out.total_count = h.total_count;
  for (const auto& [k, m] : h.bins) out.bins.emplace(-k, m);
  return out;
}

std::map<std::int64_t, double> compatibility_terms(const Histogram& female, const Histogram& male) {
  if (female.bin_width != male.bin_width)
    throw InvalidParameter("compatibility: bin widths differ (" + std::to_string(female.bin_width) +
                           " vs " + std::to_string(male.bin_width) + ")");
  std::map<std::int64_t, double> terms;
  if (female.empty() || male.empty()) return terms;
  for (const auto& [k, fm] : female.bins) {
    const double mm = male.mass(-k);
    if (mm > 0.0 && fm > 0.0) terms.emplace(k, std::min(fm, mm));
  }
  return terms;
}

double compatibility(const Histogram& female, const Histogram& male) {
  if (female.bin_width != male.bin_width)
    throw InvalidParameter("compatibility: bin widths differ (" + std::to_string(female.bin_width) +
                           " vs " + std::to_string(male.bin_width) + ")");
  if (female.empty() || male.empty()) return 0.0;
  // For normalized inputs sum_k min(f[k], m[-k]) == 1 - sum_k |f[k] - m[-k]| / 2.
  // The second form is exactly 1 for mirrored inputs, independent of how the
  // masses round.
  double l1 = 0.0;
  for (const auto& [k, fm] : female.bins) l1 += std::abs(fm - male.mass(-k));
  for (const auto& [k, mm] : male.bins)
    if (!female.bins.contains(-k)) l1 += mm;
  return std::clamp(1.0 - 0.5 * l1, 0.0, 1.0);
}

void write_csv(std::ostream& out, const Histogram& h) {
  out << "bin_center,mass\n";
  for (const auto& [k, m] : h.bins) out << fixed6(h.center(k)) << ',' << fixed6(m) << '\n';
}

std::string to_json(const Histogram& h) {
  nlohmann::ordered_json j;
  j["bin_width"] = h.bin_width;
  nlohmann::ordered_json bins = nlohmann::ordered_json::object();
  for (const auto& [k, m] : h.bins) bins[std::to_string(k)] = m;
  j["bins"] = std::move(bins);
  j["total_count"] = h.total_count;
  return j.dump(2) + "\n";
}

Histogram histogram_from_json(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  Histogram h;
  try {
    h.bin_width = j.at("bin_width").get<double>();
    for (const auto& [key, value] : j.at("bins").items()) {
      std::size_t used = 0;
      const long long k = std::stoll(key, &used);
      if (used != key.size()) throw DataError(source, 0, "bin key '" + key + "' is not an integer");
      h.bins[k] = value.get<double>();
    }
    h.total_count = j.value("total_count", h.bins.size());
  } catch (const nlohmann::json::exception& e) {
    throw DataError(source, 0, std::string("malformed histogram: ") + e.what());
  } catch (const std::logic_error&) {
    throw DataError(source, 0, "malformed histogram bin key");
  }
  if (!(h.bin_width > 0.0) || !std::isfinite(h.bin_width))
    throw DataError(source, 0, "bin_width must be positive");
  if (h.bins.empty() != (h.total_count == 0))
    throw DataError(source, 0, "total_count inconsistent with bins");
  check_masses(h, source);
  return h;
}

Histogram histogram_from_csv(const std::string& text, double bin_width, const std::string& source) {
  check_width(bin_width);
  Histogram h;
  h.bin_width = bin_width;
  std::istringstream in(text);
  CsvReader reader(in, source);
  reader.expect_header({"bin_center", "mass"});
  while (auto row = reader.next()) {
    const double center = reader.number(*row, 0);
    const double m = reader.number(*row, 1);
    const double scaled = center / bin_width;
    const auto k = bin_index(center, bin_width);
    if (std::abs(scaled - static_cast<double>(k)) > 1e-6)
      throw DataError(source, reader.line(), "bin center " + (*row)[0] + " is not a multiple of the bin width");
    h.bins[k] += m;
  }
  h.total_count = h.bins.size();
  check_masses(h, source);
  return h;
}

Histogram load_histogram(const std::string& path, double csv_bin_width) {
  std::ifstream in(path);
  if (!in) throw DataError(path, 0, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  const bool is_csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  if (is_csv) {
    if (csv_bin_width <= 0.0)
      throw DataError(path, 0, "CSV histograms carry no bin width; supply one explicitly");
    return histogram_from_csv(buf.str(), csv_bin_width, path);
  }
  return histogram_from_json(buf.str(), path);
}

}  // namespace matecompat
