#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hexfluid/angles.hpp"

namespace hexfluid {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

// Multi-ring hexagonal lattice of tri-sector sites. Sites are ordered ring by
// ring, by angle within a ring; sites[0] is the central site at the origin.
// Antenna a (0-based) lives at sites[a/3] with azimuth sector_azimuths[a%3].
struct NetworkLayout {
  double isd = 0.0;
  int rings = 0;
  std::vector<Position> sites;
  std::array<double, 3> sector_azimuths{};  // mutually 2pi/3 apart
  double rho_s = 0.0;                       // sites per m^2

  std::size_t antenna_count() const { return sites.size() * 3; }
  const Position& antenna_site(std::size_t antenna) const { return sites[antenna / 3]; }
  double antenna_azimuth(std::size_t antenna) const { return sector_azimuths[antenna % 3]; }
};

NetworkLayout hex_lattice(double isd, int rings, double azimuth_offset = deg2rad(30.0));

// Horizontal angle of the UE seen from a site, relative to a sector boresight.
double horizontal_angle(Position ue, Position site, double azimuth);

// Depression angle toward a UE at ground distance r from a mast of height h.
double vertical_angle(double r, double h);

double site_density(double isd);

// Central hexagonal cell: apothem isd/2 with an edge facing +x
// (vertices at 30 + 60k degrees, circumradius isd/sqrt(3)).
std::array<Position, 6> hex_cell_polygon(double isd);
bool in_hex_cell(Position p, double isd);           // closed (boundary counts)
bool in_hex_cell_interior(Position p, double isd);  // strict

}  // namespace hexfluid
