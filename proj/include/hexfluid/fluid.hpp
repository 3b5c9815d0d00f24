#pragma once

#include "hexfluid/antenna.hpp"
#include "hexfluid/linkbudget.hpp"

namespace hexfluid {

// Precomputed state for the continuum interference model of one scenario.
struct FluidContext {
  AntennaConfig ant;
  RadioConfig radio;
  double isd = 0.0;     // = 2 R_c
  double rho_s = 0.0;   // site density
  double b_int = 0.0;   // cached b_integral_linear(ant)
  double gv_lin = 0.0;  // cached 10^(gv_db/10)
};

FluidContext make_fluid_context(const AntennaConfig& ant, const RadioConfig& radio, double isd);

// Ring of interferers beyond the serving cell, collapsed to a continuum:
// 3 gv P K rho_s (2R_c - r)^(2-eta) / (eta - 2) * b_int. Valid for 0 < r < 2R_c.
double fluid_ring_interference(double r, const FluidContext& ctx);

// The two co-sited sectors, kept discrete with their exact +-120deg angles:
// P K (r^2+h^2)^(-eta/2) * [A(theta+2pi/3, phi) + A(theta-2pi/3, phi)].
double cosite_interference(double r, double theta, const FluidContext& ctx);

// Closed-form SINR at ground distance r and horizontal angle theta from the
// serving sector boresight.
double fluid_sinr(double r, double theta, const FluidContext& ctx);

}  // namespace hexfluid
