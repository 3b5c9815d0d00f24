#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hexfluid/fluid.hpp"
#include "hexfluid/linkbudget.hpp"

namespace hexfluid {

struct Scenario {
  std::string name;
  AntennaConfig ant{};
  RadioConfig radio{};
  double isd = 0.0;
  int rings = 4;
  std::int64_t samples = 100000;
  std::uint64_t seed = 1;
  double map_resolution = 0.0;                  // <= 0: resolved to isd/200
  double azimuth_offset = deg2rad(30.0);
  bool g0_is_override = false;                  // radio.g0 supplied, not computed
};

// Fill in derived fields: radio.g0 from the pattern unless overridden,
// map_resolution default isd/200.
void resolve_scenario(Scenario& s);

struct UESample {
  Position position;
  std::size_t serving_antenna = 0;
  double sinr_linear = 0.0;
};

struct SinrMap {
  double origin_x = 0.0;  // center of pixel (0, 0)
  double origin_y = 0.0;
  double resolution = 0.0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> values_db;  // row-major, NaN = outside the cell

  double x_at(std::size_t i) const { return origin_x + static_cast<double>(i) * resolution; }
  double y_at(std::size_t j) const { return origin_y + static_cast<double>(j) * resolution; }
};

enum class MapMethod { discrete, fluid };

// Worker threads for a run: HEXFLUID_THREADS if set, else hardware concurrency.
// Results never depend on it.
int worker_count();

// scenario.samples i.i.d. uniform positions over the central hexagon
// (rejection from the bounding box, one substream per sample).
std::vector<Position> sample_positions(const Scenario& s, std::uint64_t seed);

// Monte Carlo drop: discrete SINR for every sampled UE.
std::vector<UESample> simulate(const Scenario& s);

// Rasterized SINR over the central cell for either method.
SinrMap sinr_map(const Scenario& s, MapMethod method);

}  // namespace hexfluid
