#include "hexfluid/runner.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <system_error>
#include <vector>

#include "hexfluid/errors.hpp"

namespace hexfluid {

namespace {

// Shortest round-trip decimal form, so CSV bytes are platform-independent.
std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file '" + path.string() + "'");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file '" + path.string() + "'");
}

// Per-sample rows up to 10^4 samples; 0.1 dB bins above that.
void write_cdf_csv(const std::filesystem::path& path, const EmpiricalCdf& cdf) {
  auto out = open_output(path);
  out << "sinr_db,cdf\n";
  const double n = static_cast<double>(cdf.size());
  if (cdf.size() <= 10000) {
    for (std::size_t i = 0; i < cdf.size(); ++i)
      out << format_double(cdf.sorted_db[i]) << ',' << format_double((i + 1.0) / n) << '\n';
  } else {
    std::map<long long, std::size_t> bins;  // k = ceil(10 v): v in ((k-1)/10, k/10]
    for (double v : cdf.sorted_db) ++bins[static_cast<long long>(std::ceil(v * 10.0))];
    std::size_t below = 0;
    for (const auto& [k, count] : bins) {
      below += count;
      out << format_double(static_cast<double>(k) / 10.0) << ','
          << format_double(static_cast<double>(below) / n) << '\n';
    }
  }
  finish_output(out, path);
}

void write_map_csv(const std::filesystem::path& path, const SinrMap& map) {
  auto out = open_output(path);
  out << "x_m,y_m,sinr_db\n";
  for (std::size_t j = 0; j < map.height; ++j) {
    for (std::size_t i = 0; i < map.width; ++i) {
      const double v = map.values_db[j * map.width + i];
      if (std::isnan(v)) continue;
      out << format_double(map.x_at(i)) << ',' << format_double(map.y_at(j)) << ','
          << format_double(v) << '\n';
    }
  }
  finish_output(out, path);
}

std::int64_t present_cells(const SinrMap& map) {
  std::int64_t n = 0;
  for (double v : map.values_db)
    if (!std::isnan(v)) ++n;
  return n;
}

}  // namespace

RunSummary run(const Scenario& scenario, const std::filesystem::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();

  Scenario s = scenario;
  resolve_scenario(s);
  validate_scenario(s);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory '" + out_dir.string() +
                             "': " + ec.message());

  const std::vector<UESample> drops = simulate(s);
  std::vector<double> sinr(drops.size());
  for (std::size_t i = 0; i < drops.size(); ++i) sinr[i] = drops[i].sinr_linear;
  const EmpiricalCdf simulated = empirical_cdf(sinr);
  const EmpiricalCdf analytic = analytic_cdf(s, s.samples);
  const SinrMap discrete_map = sinr_map(s, MapMethod::discrete);
  const SinrMap fluid_map = sinr_map(s, MapMethod::fluid);

  RunSummary summary;
  summary.scenario_name = s.name;
  summary.samples = s.samples;
  summary.map_cells = present_cells(discrete_map);
  summary.ks = ks_distance(simulated, analytic);
  for (std::size_t q = 0; q < kSummaryQuantiles.size(); ++q) {
    summary.quantiles_analytic_db[q] = quantile(analytic, kSummaryQuantiles[q]);
    summary.quantiles_simulated_db[q] = quantile(simulated, kSummaryQuantiles[q]);
  }
  summary.map_stats = map_diff_stats(discrete_map, fluid_map);
  summary.seed = s.seed;

  write_cdf_csv(out_dir / "cdf_simulated.csv", simulated);
  write_cdf_csv(out_dir / "cdf_analytic.csv", analytic);
  write_map_csv(out_dir / "map_discrete.csv", discrete_map);
  write_map_csv(out_dir / "map_fluid.csv", fluid_map);

  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  auto out = open_output(out_dir / "summary.json");
  out << summary_to_json(summary, s).dump(2) << '\n';
  finish_output(out, out_dir / "summary.json");
  return summary;
}

nlohmann::ordered_json summary_to_json(const RunSummary& summary, const Scenario& s) {
  nlohmann::ordered_json j;
  j["scenario"] = scenario_to_json(s);
  j["samples"] = summary.samples;
  j["mapCells"] = summary.map_cells;
  j["ksDistance"] = summary.ks;
  static const char* kQuantileKeys[] = {"p05", "p10", "p50", "p90"};
  nlohmann::ordered_json qa, qs;
  for (std::size_t q = 0; q < kSummaryQuantiles.size(); ++q) {
    qa[kQuantileKeys[q]] = summary.quantiles_analytic_db[q];
    qs[kQuantileKeys[q]] = summary.quantiles_simulated_db[q];
  }
  j["quantilesAnalyticDb"] = qa;
  j["quantilesSimulatedDb"] = qs;
  j["mapDiff"] = {{"meanAbsDb", summary.map_stats.mean_abs},
                  {"maxAbsDb", summary.map_stats.max_abs},
                  {"rmseDb", summary.map_stats.rmse}};
  j["wallSeconds"] = summary.wall_seconds;
  j["seed"] = summary.seed;
  return j;
}

}  // namespace hexfluid
