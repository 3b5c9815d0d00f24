#include "hexfluid/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include "hexfluid/substream.hpp"

namespace hexfluid {

int worker_count() {
  if (const char* env = std::getenv("HEXFLUID_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1) return static_cast<int>(std::min(n, 1024L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Contiguous index chunks per worker; every index is computed independently,
// so the partition (and thread count) cannot affect results.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body) {
  if (n <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(), n));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  const std::int64_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

void resolve_scenario(Scenario& s) {
  if (s.map_resolution <= 0.0) s.map_resolution = s.isd / 200.0;
  if (!s.g0_is_override) s.radio.g0 = max_gain_g0(s.ant);
}

std::vector<Position> sample_positions(const Scenario& s, std::uint64_t seed) {
  const double half_isd = 0.5 * s.isd;
  const double circum = s.isd / std::sqrt(3.0);
  std::vector<Position> out(static_cast<std::size_t>(s.samples));
  parallel_for(s.samples, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      SampleStream stream(seed, static_cast<std::uint64_t>(i));
      Position p;
      do {
        p.x = (2.0 * stream.next_unit() - 1.0) * half_isd;
        p.y = (2.0 * stream.next_unit() - 1.0) * circum;
      } while (!in_hex_cell_interior(p, s.isd) || (p.x == 0.0 && p.y == 0.0));
      out[static_cast<std::size_t>(i)] = p;
    }
  });
  return out;
}

std::vector<UESample> simulate(const Scenario& s) {
  const NetworkLayout layout = hex_lattice(s.isd, s.rings, s.azimuth_offset);
  const std::vector<Position> positions = sample_positions(s, s.seed);
  std::vector<UESample> out(positions.size());
  parallel_for(s.samples, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      const Position p = positions[static_cast<std::size_t>(i)];
      const DiscreteSinr d = discrete_sinr(p, layout, s.ant, s.radio);
      out[static_cast<std::size_t>(i)] = {p, d.serving_antenna, d.sinr};
    }
  });
  return out;
}

SinrMap sinr_map(const Scenario& s, MapMethod method) {
  const double res = s.map_resolution > 0.0 ? s.map_resolution : s.isd / 200.0;
  const double circum = s.isd / std::sqrt(3.0);
  SinrMap map;
  map.resolution = res;
  map.width = static_cast<std::size_t>(std::ceil(s.isd / res));
  map.height = static_cast<std::size_t>(std::ceil(2.0 * circum / res));
  map.origin_x = -0.5 * s.isd + 0.5 * res;
  map.origin_y = -circum + 0.5 * res;
  map.values_db.assign(map.width * map.height, std::numeric_limits<double>::quiet_NaN());

  const NetworkLayout layout = hex_lattice(s.isd, s.rings, s.azimuth_offset);
  const FluidContext ctx =
      method == MapMethod::fluid ? make_fluid_context(s.ant, s.radio, s.isd) : FluidContext{};

  parallel_for(static_cast<std::int64_t>(map.height), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t j = lo; j < hi; ++j) {
      for (std::size_t i = 0; i < map.width; ++i) {
        const Position c{map.x_at(i), map.y_at(static_cast<std::size_t>(j))};
        if (!in_hex_cell(c, s.isd)) continue;
        double sinr;
        if (method == MapMethod::discrete) {
          sinr = discrete_sinr(c, layout, s.ant, s.radio).sinr;
        } else {
          const std::size_t k = serving_sector(c, layout, s.ant, s.radio);
          double rg = std::hypot(c.x, c.y);
          if (rg < 1e-9 * s.isd) rg = 1e-9 * s.isd;  // pixel centered on the mast
          const double theta = horizontal_angle(c, layout.sites[0], layout.sector_azimuths[k]);
          sinr = fluid_sinr(rg, theta, ctx);
        }
        map.values_db[static_cast<std::size_t>(j) * map.width + i] = linear_to_db(sinr);
      }
    }
  });
  return map;
}

}  // namespace hexfluid
