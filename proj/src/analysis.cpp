#include "hexfluid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hexfluid/angles.hpp"

namespace hexfluid {

double EmpiricalCdf::value_at(double x_db) const {
  if (sorted_db.empty()) throw std::domain_error("value_at: empty distribution");
  const auto it = std::upper_bound(sorted_db.begin(), sorted_db.end(), x_db);
  return static_cast<double>(it - sorted_db.begin()) / static_cast<double>(sorted_db.size());
}

EmpiricalCdf empirical_cdf(const std::vector<double>& sinr_linear) {
  if (sinr_linear.empty()) throw std::domain_error("empirical_cdf: no samples");
  EmpiricalCdf cdf;
  cdf.sorted_db.reserve(sinr_linear.size());
  for (double v : sinr_linear) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::domain_error("empirical_cdf: SINR samples must be finite and > 0");
    cdf.sorted_db.push_back(linear_to_db(v));
  }
  std::sort(cdf.sorted_db.begin(), cdf.sorted_db.end());
  return cdf;
}

EmpiricalCdf analytic_cdf(const Scenario& s, std::int64_t n_points) {
  if (n_points <= 0) throw std::domain_error("analytic_cdf: n_points must be > 0");
  Scenario probe = s;
  probe.samples = n_points;
  resolve_scenario(probe);
  const FluidContext ctx = make_fluid_context(probe.ant, probe.radio, probe.isd);
  const NetworkLayout layout = hex_lattice(probe.isd, 0, probe.azimuth_offset);
  const std::vector<Position> positions = sample_positions(probe, probe.seed);

  std::vector<double> sinr(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const Position p = positions[i];
    const std::size_t k = serving_sector(p, layout, probe.ant, probe.radio);
    const double rg = std::hypot(p.x, p.y);
    const double theta = horizontal_angle(p, layout.sites[0], layout.sector_azimuths[k]);
    sinr[i] = fluid_sinr(rg, theta, ctx);
  }
  return empirical_cdf(sinr);
}

double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b) {
  if (a.sorted_db.empty() || b.sorted_db.empty())
    throw std::domain_error("ks_distance: empty distribution");
  const double na = static_cast<double>(a.sorted_db.size());
  const double nb = static_cast<double>(b.sorted_db.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  double sup = 0.0;
  while (ia < a.sorted_db.size() && ib < b.sorted_db.size()) {
    const double x = std::min(a.sorted_db[ia], b.sorted_db[ib]);
    while (ia < a.sorted_db.size() && a.sorted_db[ia] <= x) ++ia;
    while (ib < b.sorted_db.size() && b.sorted_db[ib] <= x) ++ib;
    sup = std::max(sup, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }
  return sup;
}

double quantile(const EmpiricalCdf& cdf, double p) {
  if (cdf.sorted_db.empty()) throw std::domain_error("quantile: empty distribution");
  if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("quantile: p must lie in (0, 1]");
  const auto n = static_cast<double>(cdf.sorted_db.size());
  const auto rank = static_cast<std::size_t>(std::ceil(p * n));
  return cdf.sorted_db[std::min(cdf.sorted_db.size(), std::max<std::size_t>(rank, 1)) - 1];
}

double shannon_throughput(double sinr_linear, double bandwidth_hz) {
  if (!(sinr_linear >= 0.0)) throw std::domain_error("shannon_throughput: SINR must be >= 0");
  if (!(bandwidth_hz > 0.0)) throw std::domain_error("shannon_throughput: bandwidth must be > 0");
  return bandwidth_hz * std::log2(1.0 + sinr_linear);
}

MapDiffStats map_diff_stats(const SinrMap& a, const SinrMap& b) {
  if (a.width != b.width || a.height != b.height || a.resolution != b.resolution ||
      a.origin_x != b.origin_x || a.origin_y != b.origin_y)
    throw std::domain_error("map_diff_stats: grid geometries differ");
  MapDiffStats stats;
  std::size_t present = 0;
  double sum_abs = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < a.values_db.size(); ++i) {
    const bool pa = !std::isnan(a.values_db[i]);
    const bool pb = !std::isnan(b.values_db[i]);
    if (pa != pb) throw std::domain_error("map_diff_stats: absent-cell masks differ");
    if (!pa) continue;
    const double d = std::abs(a.values_db[i] - b.values_db[i]);
    sum_abs += d;
    sum_sq += d * d;
    stats.max_abs = std::max(stats.max_abs, d);
    ++present;
  }
  if (present == 0) throw std::domain_error("map_diff_stats: no present cells");
  stats.mean_abs = sum_abs / static_cast<double>(present);
  stats.rmse = std::sqrt(sum_sq / static_cast<double>(present));
  return stats;
}

}  // namespace hexfluid
