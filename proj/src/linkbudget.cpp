#include "hexfluid/linkbudget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hexfluid/angles.hpp"

namespace hexfluid {

double path_gain(double distance3d, const RadioConfig& radio) {
  if (!(distance3d > 0.0))
    throw std::domain_error("path_gain: distance3d must be > 0, got " +
                            std::to_string(distance3d));
  return radio.path_constant * std::pow(distance3d, -radio.path_exponent);
}

double received_power(Position ue, std::size_t antenna, const NetworkLayout& layout,
                      const AntennaConfig& ant, const RadioConfig& radio) {
  const Position& site = layout.antenna_site(antenna);
  const double dx = ue.x - site.x;
  const double dy = ue.y - site.y;
  const double rg = std::hypot(dx, dy);
  const double theta = wrap_pi(std::atan2(dy, dx) - layout.antenna_azimuth(antenna));
  const double phi = vertical_angle(rg, ant.height_m);
  const double dist_fac = std::pow(rg * rg + ant.height_m * ant.height_m,
                                   -0.5 * radio.path_exponent);
  return radio.g0 * radio.tx_power_w * radio.path_constant * dist_fac *
         pattern_linear(theta, phi, ant);
}

std::size_t serving_sector(Position ue, const NetworkLayout& layout, const AntennaConfig& ant,
                           const RadioConfig& radio) {
  std::size_t best = 0;
  double best_pw = received_power(ue, 0, layout, ant, radio);
  for (std::size_t k = 1; k < 3; ++k) {
    const double pw = received_power(ue, k, layout, ant, radio);
    if (pw > best_pw) {  // ties keep the lowest index
      best_pw = pw;
      best = k;
    }
  }
  return best;
}

DiscreteSinr discrete_sinr(Position ue, const NetworkLayout& layout, const AntennaConfig& ant,
                           const RadioConfig& radio) {
  const double h = ant.height_m;
  const double eta = radio.path_exponent;
  const double scale = radio.g0 * radio.tx_power_w * radio.path_constant;

  double central[3];
  {
    const Position& site = layout.sites[0];
    const double dx = ue.x - site.x;
    const double dy = ue.y - site.y;
    const double rg = std::hypot(dx, dy);
    const double bearing = std::atan2(dy, dx);
    const double phi = vertical_angle(rg, h);
    const double dist_fac = std::pow(rg * rg + h * h, -0.5 * eta);
    for (std::size_t k = 0; k < 3; ++k) {
      const double theta = wrap_pi(bearing - layout.sector_azimuths[k]);
      central[k] = scale * dist_fac * pattern_linear(theta, phi, ant);
    }
  }
  std::size_t serving = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (central[k] > central[serving]) serving = k;

  double interference = 0.0;
  for (std::size_t k = 0; k < 3; ++k)
    if (k != serving) interference += central[k];
  for (std::size_t s = 1; s < layout.sites.size(); ++s) {
    const Position& site = layout.sites[s];
    const double dx = ue.x - site.x;
    const double dy = ue.y - site.y;
    const double rg = std::hypot(dx, dy);
    const double bearing = std::atan2(dy, dx);
    const double phi = vertical_angle(rg, h);
    const double dist_fac = std::pow(rg * rg + h * h, -0.5 * eta);
    for (std::size_t k = 0; k < 3; ++k) {
      const double theta = wrap_pi(bearing - layout.sector_azimuths[k]);
      interference += scale * dist_fac * pattern_linear(theta, phi, ant);
    }
  }
  return {central[serving] / (interference + radio.noise_w), serving};
}

}  // namespace hexfluid
