#pragma once

// Closed-form spectrum of the particle on a regular N-gon and its two
// limiting cases.
//
// Single-valuedness of the piecewise plane waves quantizes the wavenumber
// through k*a*sin(pi/N) = n*pi (equivalently k*b*tan(pi/N) = n*pi), giving
//
//     E_n = n^2 pi^2 hbar^2 / (2 a^2 sin^2(pi/N)),   n = 0, 1, 2, ...
//
// As N -> infinity the levels tend to those of a particle on a circle of
// radius a; at N = 2 the polygon degenerates to a segment of length 2a and
// the levels become those of an infinite well (with k replaced by k/2).

#include "polyqm/geometry.hpp"

namespace polyqm {

struct EnergyLevel {
    int n = 0;           // quantum number (>= 0)
    double k = 0.0;      // wavenumber, k*a*sin(pi/N) = n*pi
    double energy = 0.0; // hbar^2 k^2 / 2 at unit mass
    int degeneracy = 1;  // 1 for n = 0, else 2 (plane waves e^{+-ikq})
};

// Particle-on-a-circle limit: l = k*a/N is the angular momentum in units of
// hbar; l -> n from above as N grows.
struct CircleLimitLevel {
    double l = 0.0;
    double energy = 0.0; // hbar^2 l^2 / (2 a^2)
};

// Infinite-well level for the N = 2 segment of width 2a.
struct WellLevel {
    int n = 0;           // >= 1; the well has no constant mode
    double energy = 0.0; // n^2 pi^2 hbar^2 / (8 a^2)
};

// k = n*pi / (a*sin(pi/N)).  Requires N >= 3 (use well_level for N = 2)
// and n >= 0.
double quantized_k(int n, const PolygonSpec& spec, const PolygonGeometry& geom);

EnergyLevel energy_level(int n, const PolygonSpec& spec, const PolygonGeometry& geom);

CircleLimitLevel circle_limit_level(int n, const PolygonSpec& spec);

// N = 2 only; n >= 1.
WellLevel well_level(int n, const PolygonSpec& spec);

// Extension, not part of the closed-form model: free particle on a ring of
// circumference L = N*c, quantized by k*L = 2*pi*j.  The polygon spectrum is
// the subset j = n*N; exposing the full ring spectrum makes that relation
// checkable.  Never mixed into the default spectrum outputs.
EnergyLevel perimeter_level(int j, const PolygonSpec& spec, const PolygonGeometry& geom);

}  // namespace polyqm
