#pragma once

#include <functional>

#include "hexfluid/quadrature.hpp"

namespace hexfluid {

// 3D sector antenna: parabolic-in-dB main lobes with a sidelobe floor.
// All pattern values are signed dB (attenuations <= 0); linear = 10^(dB/10).
struct AntennaConfig {
  double theta3db;   // horizontal 3 dB beamwidth, radians
  double phi3db;     // vertical 3 dB beamwidth, radians
  double phi_tilt;   // downtilt, radians
  double am_db;      // attenuation floor, positive dB
  double height_m;   // antenna height h

  // The far-interferer reduction below is exact only once the downtilt
  // saturates the vertical pattern toward the horizon.
  bool valid_3d() const { return phi_tilt >= phi3db; }
};

double horizontal_attenuation_db(double theta, const AntennaConfig& cfg);
double vertical_attenuation_db(double phi, const AntennaConfig& cfg);
double pattern_db(double theta, double phi, const AntennaConfig& cfg);
double pattern_linear(double theta, double phi, const AntennaConfig& cfg);

// Horizon-limit vertical gain and the horizontal-only far-interferer pattern.
double gv_db(const AntennaConfig& cfg);
double b_db(double theta, const AntennaConfig& cfg);

// Integral of 10^(B(theta)/10) over (-pi, pi]; in (0, 2pi].
double b_integral_linear(const AntennaConfig& cfg);

// Integral of f(theta, phi) cos(phi) dphi dtheta with theta the azimuth in
// (-pi, pi] and phi the elevation in [-pi/2, pi/2] (full sphere, 4pi sterad).
double sphere_integral(const std::function<double(double, double)>& f,
                       const std::vector<double>& theta_breaks = {},
                       const std::vector<double>& phi_breaks = {});

// Max gain normalizing the pattern to unit power over the sphere; >= 1.
double max_gain_g0(const AntennaConfig& cfg);

}  // namespace hexfluid
