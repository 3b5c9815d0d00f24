#include "hexfluid/fluid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hexfluid/angles.hpp"
#include "hexfluid/errors.hpp"
#include "hexfluid/geometry.hpp"

namespace hexfluid {

namespace {

void check_radius(double r, const FluidContext& ctx, const char* op) {
  if (!(r > 0.0))
    throw std::domain_error(std::string(op) + ": r must be > 0, got " + std::to_string(r));
  if (ctx.isd - r <= 1e-9 * ctx.isd)
    throw std::domain_error(std::string(op) + ": r must be < 2*R_c = " + std::to_string(ctx.isd));
}

// (2R_c - r)^(2-eta) without precision loss near the edge.
double edge_power(double r, const FluidContext& ctx) {
  return std::exp((2.0 - ctx.radio.path_exponent) * std::log(ctx.isd - r));
}

}  // namespace

FluidContext make_fluid_context(const AntennaConfig& ant, const RadioConfig& radio, double isd) {
  if (!(radio.path_exponent > 2.0))
    throw ValidationError("pathExponent must be > 2 for the fluid model, got " +
                          std::to_string(radio.path_exponent));
  if (!(isd > 0.0)) throw ValidationError("isd must be > 0, got " + std::to_string(isd));
  FluidContext ctx;
  ctx.ant = ant;
  ctx.radio = radio;
  ctx.isd = isd;
  ctx.rho_s = site_density(isd);
  ctx.b_int = b_integral_linear(ant);
  ctx.gv_lin = db_to_linear(gv_db(ant));
  return ctx;
}

double fluid_ring_interference(double r, const FluidContext& ctx) {
  check_radius(r, ctx, "fluid_ring_interference");
  const double eta = ctx.radio.path_exponent;
  return 3.0 * ctx.gv_lin * ctx.radio.tx_power_w * ctx.radio.path_constant * ctx.rho_s *
         edge_power(r, ctx) / (eta - 2.0) * ctx.b_int;
}

double cosite_interference(double r, double theta, const FluidContext& ctx) {
  if (!(r > 0.0))
    throw std::domain_error("cosite_interference: r must be > 0, got " + std::to_string(r));
  const double h = ctx.ant.height_m;
  const double phi = vertical_angle(r, h);
  const double dist_fac = std::pow(r * r + h * h, -0.5 * ctx.radio.path_exponent);
  const double third = 2.0 * kPi / 3.0;
  return ctx.radio.tx_power_w * ctx.radio.path_constant * dist_fac *
         (pattern_linear(wrap_pi(theta + third), phi, ctx.ant) +
          pattern_linear(wrap_pi(theta - third), phi, ctx.ant));
}

double fluid_sinr(double r, double theta, const FluidContext& ctx) {
  check_radius(r, ctx, "fluid_sinr");
  const double eta = ctx.radio.path_exponent;
  const double h = ctx.ant.height_m;
  const double phi = vertical_angle(r, h);
  const double a0 = pattern_linear(wrap_pi(theta), phi, ctx.ant);
  const double dist_fac = std::pow(r * r + h * h, -0.5 * eta);
  const double third = 2.0 * kPi / 3.0;

  const double t1 = 3.0 * ctx.gv_lin * ctx.rho_s * edge_power(r, ctx) /
                    ((eta - 2.0) * dist_fac) * ctx.b_int / a0;
  const double t2 = (pattern_linear(wrap_pi(theta + third), phi, ctx.ant) +
                     pattern_linear(wrap_pi(theta - third), phi, ctx.ant)) /
                    a0;
  const double t3 = ctx.radio.noise_w / (ctx.radio.g0 * ctx.radio.tx_power_w *
                                         ctx.radio.path_constant * dist_fac * a0);
  return 1.0 / (t1 + t2 + t3);
}

}  // namespace hexfluid
