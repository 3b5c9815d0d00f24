#include "hexfluid/antenna.hpp"

#include <algorithm>
#include <cmath>

#include "hexfluid/angles.hpp"

namespace hexfluid {

double horizontal_attenuation_db(double theta, const AntennaConfig& cfg) {
  const double q = theta / cfg.theta3db;
  return -std::min(12.0 * q * q, cfg.am_db);
}

double vertical_attenuation_db(double phi, const AntennaConfig& cfg) {
  const double q = (phi - cfg.phi_tilt) / cfg.phi3db;
  return -std::min(12.0 * q * q, cfg.am_db);
}

double pattern_db(double theta, double phi, const AntennaConfig& cfg) {
  const double total =
      -(horizontal_attenuation_db(theta, cfg) + vertical_attenuation_db(phi, cfg));
  return -std::min(total, cfg.am_db);
}

double pattern_linear(double theta, double phi, const AntennaConfig& cfg) {
  return db_to_linear(pattern_db(theta, phi, cfg));
}

double gv_db(const AntennaConfig& cfg) {
  const double q = cfg.phi_tilt / cfg.phi3db;
  return -std::min(12.0 * q * q, cfg.am_db);
}

double b_db(double theta, const AntennaConfig& cfg) {
  const double clip = cfg.am_db + gv_db(cfg);  // in [0, am]
  return -std::min(-horizontal_attenuation_db(theta, cfg), clip);
}

double b_integral_linear(const AntennaConfig& cfg) {
  const double clip = cfg.am_db + gv_db(cfg);
  std::vector<double> breaks;
  const double theta_clip = cfg.theta3db * std::sqrt(clip / 12.0);
  if (theta_clip < kPi) breaks = {-theta_clip, theta_clip};
  QuadratureOptions opt;
  opt.rel_tol = 1e-10;
  return integrate_adaptive([&](double t) { return db_to_linear(b_db(t, cfg)); }, -kPi, kPi, opt,
                            breaks)
      .value;
}

double sphere_integral(const std::function<double(double, double)>& f,
                       const std::vector<double>& theta_breaks,
                       const std::vector<double>& phi_breaks) {
  QuadratureOptions inner_opt;
  inner_opt.rel_tol = 1e-11;
  inner_opt.abs_tol = 1e-16;
  QuadratureOptions outer_opt;
  outer_opt.rel_tol = 1e-10;
  outer_opt.abs_tol = 1e-15;
  auto outer = [&](double phi) {
    const double inner =
        integrate_adaptive([&](double theta) { return f(theta, phi); }, -kPi, kPi, inner_opt,
                           theta_breaks)
            .value;
    return inner * std::cos(phi);
  };
  return integrate_adaptive(outer, -kPi / 2.0, kPi / 2.0, outer_opt, phi_breaks).value;
}

double max_gain_g0(const AntennaConfig& cfg) {
  QuadratureOptions inner_opt;
  inner_opt.rel_tol = 1e-11;
  inner_opt.abs_tol = 1e-16;
  QuadratureOptions outer_opt;
  outer_opt.rel_tol = 1e-10;
  outer_opt.abs_tol = 1e-15;

  // The azimuth cut clips where the residual headroom am - (-A_v) runs out,
  // so its kink moves with phi; hand the exact location to the quadrature.
  auto inner = [&](double phi) {
    const double headroom = cfg.am_db + vertical_attenuation_db(phi, cfg);
    std::vector<double> tbreaks;
    if (headroom > 0.0) {
      const double theta_k = cfg.theta3db * std::sqrt(headroom / 12.0);
      if (theta_k < kPi) tbreaks = {-theta_k, theta_k};
    }
    return integrate_adaptive(
               [&](double theta) { return pattern_linear(theta, phi, cfg); }, -kPi, kPi, inner_opt,
               tbreaks)
        .value;
  };

  const double phi_sat = cfg.phi3db * std::sqrt(cfg.am_db / 12.0);
  std::vector<double> pbreaks;
  for (double p : {cfg.phi_tilt - phi_sat, cfg.phi_tilt, cfg.phi_tilt + phi_sat})
    if (p > -kPi / 2.0 && p < kPi / 2.0) pbreaks.push_back(p);
  const double integral =
      integrate_adaptive([&](double phi) { return inner(phi) * std::cos(phi); }, -kPi / 2.0,
                         kPi / 2.0, outer_opt, pbreaks)
          .value;
  return 4.0 * kPi / integral;
}

}  // namespace hexfluid
