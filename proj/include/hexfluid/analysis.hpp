#pragma once

#include <cstdint>
#include <vector>

#include "hexfluid/simulator.hpp"

namespace hexfluid {

// Right-continuous empirical distribution of SINR in dB.
struct EmpiricalCdf {
  std::vector<double> sorted_db;

  std::size_t size() const { return sorted_db.size(); }
  double value_at(double x_db) const;  // F(x) = #{samples <= x} / n
};

EmpiricalCdf empirical_cdf(const std::vector<double>& sinr_linear);

// Fluid-model SINR evaluated at sampled UE positions (same sampler and seed
// as the Monte Carlo drop, so both CDFs live on the same footing).
EmpiricalCdf analytic_cdf(const Scenario& s, std::int64_t n_points);

// Exact two-sample Kolmogorov-Smirnov distance (sup over merged breakpoints).
double ks_distance(const EmpiricalCdf& a, const EmpiricalCdf& b);

// Smallest sample value v with F(v) >= p, in dB. p in (0, 1].
double quantile(const EmpiricalCdf& cdf, double p);

double shannon_throughput(double sinr_linear, double bandwidth_hz);

struct MapDiffStats {
  double mean_abs = 0.0;
  double max_abs = 0.0;
  double rmse = 0.0;
};

// Pixelwise |dB| difference statistics over present cells; grids must agree
// in geometry and absent mask.
MapDiffStats map_diff_stats(const SinrMap& a, const SinrMap& b);

}  // namespace hexfluid
