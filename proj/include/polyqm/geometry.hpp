#pragma once

// Regular N-gon geometry and the side-wise coordinate maps.
//
// A regular polygon with circumradius a is described in polar form by
// r(xi) = b*sec(xi - (2m-1)*pi/N) on the m-th side, where b is the apothem
// and xi in [0, 2*pi] runs once around the polygon.  theta = xi - (2m-1)*pi/N
// is the angle measured from the perpendicular bisector of side m, and
// q = b*tan(theta) is the signed distance from the side midpoint along the
// side.  Everything downstream (spectrum, wavefunctions, oracles) is built
// on these maps.

#include <cstdint>

namespace polyqm {

struct PhysicalConstants {
    double hbar = 1.0;
    double mass = 1.0;  // locked to 1; the closed forms assume unit mass
};

struct PolygonSpec {
    int n_sides = 0;
    double circumradius = 0.0;
    PhysicalConstants constants{};

    // Side parametrization breaks down at N=2 (the polygon degenerates to a
    // doubly traversed segment); the spectrum formulas remain valid there.
    bool degenerate_parametrization() const { return n_sides == 2; }
};

// Throws std::invalid_argument on violation of the PolygonSpec invariants
// (n_sides >= 2, circumradius > 0, hbar > 0, mass == 1).
void validate(const PolygonSpec& spec);

struct PolygonGeometry {
    double apothem = 0.0;      // b = a*cos(pi/N)
    double side_length = 0.0;  // c = 2*a*sin(pi/N)
    double perimeter = 0.0;    // L = N*c
    double half_angle = 0.0;   // pi/N, the half opening angle of one side
};

PolygonGeometry derive_geometry(const PolygonSpec& spec);

// Polar angle xi resolved onto a side.  side_index m is 1-based; theta lies
// in [-pi/N, +pi/N] with theta = 0 at the side midpoint.
struct SideCoordinate {
    int side_index = 0;
    double xi = 0.0;
    double theta = 0.0;
};

// Resolves xi in [0, 2*pi] to its side.  Corners belong to the lower-indexed
// side; xi = 0 maps to side 1 and xi = 2*pi to side N.  Rejects N = 2 and
// xi outside [0, 2*pi] (normalize mod 2*pi before calling).
SideCoordinate locate(double xi, const PolygonSpec& spec);

// Builds the coordinate for a (side, theta) pair directly; |theta| <= pi/N.
SideCoordinate side_point(int side_index, double theta, const PolygonSpec& spec);

// Distance from the center, r = b*sec(theta).  Ranges over [b, a]: apothem at
// the midpoint, circumradius at the corners.
double radial(const SideCoordinate& coord, const PolygonGeometry& geom);

// Flattening coordinate q = b*tan(theta) in [-c/2, +c/2]; the Hamiltonian is
// free-particle form in q.
double q_of_xi(const SideCoordinate& coord, const PolygonGeometry& geom);

// Inverse of q_of_xi on side m.  Rejects |q| > c/2 (values within a few ulp
// of the corner are snapped onto it).
SideCoordinate xi_of_q(double q, int side_index, const PolygonSpec& spec,
                       const PolygonGeometry& geom);

// Cumulative arc length s = (m-1)*c + q + c/2, increasing from 0 at xi = 0
// to L at xi = 2*pi.
double arc_position(const SideCoordinate& coord, const PolygonGeometry& geom);

}  // namespace polyqm
