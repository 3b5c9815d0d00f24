#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "hexfluid/analysis.hpp"
#include "hexfluid/scenario_io.hpp"

namespace hexfluid {

inline constexpr std::array<double, 4> kSummaryQuantiles{0.05, 0.1, 0.5, 0.9};

struct RunSummary {
  std::string scenario_name;
  std::int64_t samples = 0;
  std::int64_t map_cells = 0;  // present cells per map
  double ks = 0.0;
  std::array<double, 4> quantiles_analytic_db{};
  std::array<double, 4> quantiles_simulated_db{};
  MapDiffStats map_stats;
  double wall_seconds = 0.0;
  std::uint64_t seed = 0;
};

// Full pipeline: simulate + analytic CDF + both maps; writes
// cdf_simulated.csv, cdf_analytic.csv, map_discrete.csv, map_fluid.csv and
// summary.json into out_dir. CSV bytes are identical across reruns with the
// same scenario and seed.
RunSummary run(const Scenario& s, const std::filesystem::path& out_dir);

nlohmann::ordered_json summary_to_json(const RunSummary& summary, const Scenario& s);

}  // namespace hexfluid
