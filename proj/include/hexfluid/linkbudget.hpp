#pragma once

#include <cmath>
#include <cstddef>

#include "hexfluid/antenna.hpp"
#include "hexfluid/geometry.hpp"

namespace hexfluid {

// Thermal noise floor (-174 dBm/Hz) over a bandwidth, in watts.
inline double thermal_noise_w(double bandwidth_hz) {
  return std::pow(10.0, (-174.0 + 10.0 * std::log10(bandwidth_hz)) / 10.0) / 1000.0;
}

struct RadioConfig {
  double tx_power_w = 1.0;                      // P, per sub-carrier
  double path_constant = 1e-4;                  // K
  double path_exponent = 3.18;                  // eta, > 2
  double noise_w = thermal_noise_w(15000.0);    // N_th over the sub-carrier
  double bandwidth_hz = 15000.0;                // W
  double g0 = 1.0;                              // max antenna gain, >= 1
};

double path_gain(double distance3d, const RadioConfig& radio);

// G0 * P * K * (r^2 + h^2)^(-eta/2) * pattern_linear for one antenna.
double received_power(Position ue, std::size_t antenna, const NetworkLayout& layout,
                      const AntennaConfig& ant, const RadioConfig& radio);

// Best received power among the central site's three sectors (ties -> lowest).
std::size_t serving_sector(Position ue, const NetworkLayout& layout, const AntennaConfig& ant,
                           const RadioConfig& radio);

struct DiscreteSinr {
  double sinr = 0.0;
  std::size_t serving_antenna = 0;
};

// Full discrete sum: serving power over everything else plus noise.
DiscreteSinr discrete_sinr(Position ue, const NetworkLayout& layout, const AntennaConfig& ant,
                           const RadioConfig& radio);

}  // namespace hexfluid
