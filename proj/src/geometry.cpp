#include "hexfluid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace hexfluid {

NetworkLayout hex_lattice(double isd, int rings, double azimuth_offset) {
  NetworkLayout layout;
  layout.isd = isd;
  layout.rings = rings;
  layout.rho_s = site_density(isd);
  for (int k = 0; k < 3; ++k)
    layout.sector_azimuths[static_cast<std::size_t>(k)] =
        wrap_pi(azimuth_offset + k * (2.0 * kPi / 3.0));

  // Lattice basis (isd, 0) and (isd/2, isd*sqrt(3)/2); ring index is the hex
  // (cube-coordinate) distance from the origin.
  struct Entry {
    int ring;
    double angle;
    Position pos;
  };
  std::vector<Entry> entries;
  const double root3_half = std::sqrt(3.0) / 2.0;
  for (int i = -rings; i <= rings; ++i) {
    for (int j = -rings; j <= rings; ++j) {
      const int ring = std::max({std::abs(i), std::abs(j), std::abs(i + j)});
      if (ring > rings) continue;
      const double x = isd * (i + 0.5 * j);
      const double y = isd * (root3_half * j);
      entries.push_back({ring, ring == 0 ? 0.0 : std::atan2(y, x), {x, y}});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.ring, a.angle) < std::tie(b.ring, b.angle);
  });
  layout.sites.reserve(entries.size());
  for (const Entry& e : entries) layout.sites.push_back(e.pos);
  return layout;
}

double horizontal_angle(Position ue, Position site, double azimuth) {
  if (ue.x == site.x && ue.y == site.y)
    throw std::domain_error("horizontal_angle: ue coincides with the site");
  return wrap_pi(std::atan2(ue.y - site.y, ue.x - site.x) - azimuth);
}

double vertical_angle(double r, double h) {
  if (!(r > 0.0)) throw std::domain_error("vertical_angle: r must be > 0");
  return std::atan2(h, r);
}

double site_density(double isd) { return 2.0 / (std::sqrt(3.0) * isd * isd); }

std::array<Position, 6> hex_cell_polygon(double isd) {
  const double circum = isd / std::sqrt(3.0);
  std::array<Position, 6> poly;
  for (int k = 0; k < 6; ++k) {
    const double a = deg2rad(30.0 + 60.0 * k);
    poly[static_cast<std::size_t>(k)] = {circum * std::cos(a), circum * std::sin(a)};
  }
  return poly;
}

namespace {

// Largest projection onto the three edge-normal axes (0, +-60 degrees).
double hex_projection(Position p, double isd) {
  (void)isd;
  const double root3_half = std::sqrt(3.0) / 2.0;
  const double a = std::abs(p.x);
  const double b = std::abs(0.5 * p.x + root3_half * p.y);
  const double c = std::abs(-0.5 * p.x + root3_half * p.y);
  return std::max({a, b, c});
}

}  // namespace

bool in_hex_cell(Position p, double isd) { return hex_projection(p, isd) <= 0.5 * isd; }

bool in_hex_cell_interior(Position p, double isd) { return hex_projection(p, isd) < 0.5 * isd; }

}  // namespace hexfluid
