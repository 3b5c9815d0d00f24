#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"

#include "hexfluid/analysis.hpp"
#include "hexfluid/scenario_io.hpp"
#include "hexfluid/simulator.hpp"

using namespace hexfluid;

namespace {

Scenario small_scenario() {
  Scenario s = preset_scenario("scenario1");
  s.samples = 2000;
  s.rings = 2;
  resolve_scenario(s);
  return s;
}

}  // namespace

TEST_CASE("scenario resolution fills the derived fields") {
  Scenario s = preset_scenario("scenario2");
  CHECK(s.map_resolution == 0.0);
  resolve_scenario(s);
  CHECK(s.map_resolution == doctest::Approx(750.0 / 200.0));
  CHECK(s.radio.g0 == doctest::Approx(max_gain_g0(s.ant)).epsilon(1e-12));

  Scenario forced = preset_scenario("scenario2");
  forced.radio.g0 = 12.5;
  forced.g0_is_override = true;
  forced.map_resolution = 10.0;
  resolve_scenario(forced);
  CHECK(forced.radio.g0 == 12.5);
  CHECK(forced.map_resolution == 10.0);
}

TEST_CASE("worker count respects the environment override") {
  setenv("HEXFLUID_THREADS", "5", 1);
  CHECK(worker_count() == 5);
  setenv("HEXFLUID_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  setenv("HEXFLUID_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  unsetenv("HEXFLUID_THREADS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("position sampling is uniform over the open hexagon") {
  Scenario s = small_scenario();
  s.samples = 100000;
  const auto pts = sample_positions(s, s.seed);
  CHECK(pts.size() == 100000);
  for (const Position& p : pts) {
    CHECK(in_hex_cell_interior(p, s.isd));
    CHECK(!(p.x == 0.0 && p.y == 0.0));
  }

  // CLT bound on the mean with the exact hexagon second moment 5R^2/24
  const double circum = s.isd / std::sqrt(3.0);
  const double var = 5.0 * circum * circum / 24.0;
  const double bound = 3.0 * std::sqrt(var / static_cast<double>(pts.size()));
  double mx = 0.0, my = 0.0, vx = 0.0, vy = 0.0;
  for (const Position& p : pts) {
    mx += p.x;
    my += p.y;
    vx += p.x * p.x;
    vy += p.y * p.y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  vx = vx / static_cast<double>(pts.size()) - mx * mx;
  vy = vy / static_cast<double>(pts.size()) - my * my;
  CHECK(std::abs(mx) < bound);
  CHECK(std::abs(my) < bound);
  CHECK(vx == doctest::Approx(var).epsilon(0.03));
  CHECK(vy == doctest::Approx(var).epsilon(0.03));
}

TEST_CASE("position sampling is a pure function of (seed, index)") {
  Scenario s = small_scenario();
  const auto a = sample_positions(s, s.seed);
  const auto b = sample_positions(s, s.seed);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
  }

  const auto other = sample_positions(s, s.seed + 1);
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) same += (a[i].x == other[i].x);
  CHECK(same < a.size() / 100);

  // per-sample substreams: a longer run shares its prefix
  Scenario longer = s;
  longer.samples = 4000;
  const auto ext = sample_positions(longer, s.seed);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(ext[i].x == a[i].x);
    CHECK(ext[i].y == a[i].y);
  }
}

TEST_CASE("simulation wraps the discrete SINR per sampled UE") {
  Scenario s = small_scenario();
  const auto drops = simulate(s);
  REQUIRE(drops.size() == static_cast<std::size_t>(s.samples));
  const auto pts = sample_positions(s, s.seed);
  const NetworkLayout l = hex_lattice(s.isd, s.rings, s.azimuth_offset);
  for (std::size_t i = 0; i < 64; ++i) {
    const auto want = discrete_sinr(pts[i], l, s.ant, s.radio);
    CHECK(drops[i].position.x == pts[i].x);
    CHECK(drops[i].position.y == pts[i].y);
    CHECK(drops[i].sinr_linear == want.sinr);
    CHECK(drops[i].serving_antenna == want.serving_antenna);
    CHECK(drops[i].serving_antenna < 3);
  }
}

TEST_CASE("simulation totality across the built-in scenarios") {
  for (const std::string& name : preset_names()) {
    Scenario s = preset_scenario(name);
    s.samples = 10000;
    resolve_scenario(s);
    const auto drops = simulate(s);
    for (const UESample& d : drops) {
      CHECK(d.sinr_linear > 0.0);
      CHECK(std::isfinite(d.sinr_linear));
    }
  }
}

TEST_CASE("simulation is independent of the worker count") {
  Scenario s = small_scenario();
  setenv("HEXFLUID_THREADS", "1", 1);
  const auto serial = simulate(s);
  setenv("HEXFLUID_THREADS", "3", 1);
  const auto threaded = simulate(s);
  unsetenv("HEXFLUID_THREADS");
  const auto defaulted = simulate(s);
  REQUIRE(serial.size() == threaded.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].sinr_linear == threaded[i].sinr_linear);
    CHECK(serial[i].sinr_linear == defaulted[i].sinr_linear);
    CHECK(serial[i].serving_antenna == threaded[i].serving_antenna);
  }
}

TEST_CASE("simulated and fluid medians agree over the same drop") {
  Scenario s = preset_scenario("scenario1");
  s.samples = 20000;
  resolve_scenario(s);
  std::vector<double> sim;
  for (const UESample& d : simulate(s)) sim.push_back(d.sinr_linear);
  const double med_sim = quantile(empirical_cdf(sim), 0.5);
  const double med_fluid = quantile(analytic_cdf(s, s.samples), 0.5);
  CHECK(std::abs(med_sim - med_fluid) < 1.0);  // dB
}

TEST_CASE("SINR map geometry and absent mask") {
  Scenario s = small_scenario();
  s.map_resolution = 25.0;
  const SinrMap discrete = sinr_map(s, MapMethod::discrete);
  const SinrMap fluid = sinr_map(s, MapMethod::fluid);
  CHECK(discrete.width == 20);
  CHECK(discrete.height == static_cast<std::size_t>(
                               std::ceil(2.0 * s.isd / std::sqrt(3.0) / s.map_resolution)));
  CHECK(discrete.values_db.size() == discrete.width * discrete.height);
  CHECK(discrete.origin_x == doctest::Approx(-s.isd / 2.0 + 12.5));

  REQUIRE(fluid.width == discrete.width);
  REQUIRE(fluid.height == discrete.height);
  std::size_t present = 0;
  for (std::size_t j = 0; j < discrete.height; ++j) {
    for (std::size_t i = 0; i < discrete.width; ++i) {
      const double vd = discrete.values_db[j * discrete.width + i];
      const double vf = fluid.values_db[j * fluid.width + i];
      const bool inside = in_hex_cell({discrete.x_at(i), discrete.y_at(j)}, s.isd);
      CHECK(std::isnan(vd) == !inside);
      CHECK(std::isnan(vf) == !inside);
      if (inside) {
        CHECK(std::isfinite(vd));
        CHECK(std::isfinite(vf));
        ++present;
      }
    }
  }
  CHECK(present > discrete.width * discrete.height / 2);

  // element-wise compare: NaN (absent) cells defeat vector equality
  const SinrMap again = sinr_map(s, MapMethod::discrete);
  REQUIRE(again.values_db.size() == discrete.values_db.size());
  for (std::size_t i = 0; i < again.values_db.size(); ++i) {
    const double u = again.values_db[i];
    const double v = discrete.values_db[i];
    CHECK(((std::isnan(u) && std::isnan(v)) || u == v));
  }
}

TEST_CASE("maps are mirror-symmetric across the sector-boundary axis") {
  Scenario s = preset_scenario("scenario1");
  s.rings = 2;
  s.map_resolution = 500.0 / 40.0;
  resolve_scenario(s);
  for (MapMethod m : {MapMethod::discrete, MapMethod::fluid}) {
    const SinrMap map = sinr_map(s, m);
    for (std::size_t j = 0; j < map.height; ++j) {
      for (std::size_t i = 0; i < map.width; ++i) {
        const double v = map.values_db[j * map.width + i];
        const double w = map.values_db[j * map.width + (map.width - 1 - i)];
        CHECK(map.x_at(map.width - 1 - i) == -map.x_at(i));
        if (std::isnan(v)) {
          CHECK(std::isnan(w));
        } else {
          CHECK(v == doctest::Approx(w).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("discrete and fluid maps stay close") {
  Scenario s = preset_scenario("scenario2");
  s.map_resolution = 750.0 / 60.0;
  resolve_scenario(s);
  const MapDiffStats stats =
      map_diff_stats(sinr_map(s, MapMethod::discrete), sinr_map(s, MapMethod::fluid));
  CHECK(stats.mean_abs <= 2.0);
  CHECK(stats.max_abs < 30.0);
  CHECK(stats.rmse >= stats.mean_abs);
}

TEST_CASE("sample CDF converges to the area-weighted map CDF") {
  Scenario s = preset_scenario("scenario1");
  s.samples = 100000;
  s.map_resolution = 2.0;
  resolve_scenario(s);
  std::vector<double> sim;
  for (const UESample& d : simulate(s)) sim.push_back(d.sinr_linear);
  const EmpiricalCdf sample_cdf = empirical_cdf(sim);

  const SinrMap map = sinr_map(s, MapMethod::discrete);
  EmpiricalCdf map_cdf;
  for (double v : map.values_db)
    if (!std::isnan(v)) map_cdf.sorted_db.push_back(v);
  std::sort(map_cdf.sorted_db.begin(), map_cdf.sorted_db.end());
  CHECK(ks_distance(sample_cdf, map_cdf) <= 0.02);
}
