#include "polyqm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace polyqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_parametrizable(const PolygonSpec& spec) {
    validate(spec);
    require(spec.n_sides >= 3,
            "side parametrization requires n_sides >= 3 (N=2 degenerates to a segment)");
}

}  // namespace

void validate(const PolygonSpec& spec) {
    require(spec.n_sides >= 2, "n_sides must be >= 2");
    require(std::isfinite(spec.circumradius) && spec.circumradius > 0.0,
            "circumradius must be positive");
    require(std::isfinite(spec.constants.hbar) && spec.constants.hbar > 0.0,
            "hbar must be positive");
    require(spec.constants.mass == 1.0, "mass is locked to 1.0");
}

PolygonGeometry derive_geometry(const PolygonSpec& spec) {
    validate(spec);
    const double half = std::numbers::pi / spec.n_sides;
    PolygonGeometry g;
    g.half_angle = half;
    g.apothem = spec.circumradius * std::cos(half);
    g.side_length = 2.0 * spec.circumradius * std::sin(half);
    g.perimeter = spec.n_sides * g.side_length;
    return g;
}

SideCoordinate locate(double xi, const PolygonSpec& spec) {
    require_parametrizable(spec);
    require(std::isfinite(xi) && xi >= 0.0 && xi <= kTwoPi,
            "xi must lie in [0, 2*pi]");
    const int n = spec.n_sides;
    const double half = std::numbers::pi / n;
    // Side m owns (2(m-1)pi/N, 2m*pi/N]: corners go to the lower-indexed
    // side, and xi = 0 falls to side 1 via the clamp.
    const double t = xi * static_cast<double>(n) / kTwoPi;
    const int m = std::clamp(static_cast<int>(std::ceil(t)), 1, n);
    SideCoordinate coord;
    coord.side_index = m;
    coord.xi = xi;
    coord.theta = std::clamp(xi - (2 * m - 1) * half, -half, half);
    return coord;
}

SideCoordinate side_point(int side_index, double theta, const PolygonSpec& spec) {
    require_parametrizable(spec);
    const int n = spec.n_sides;
    const double half = std::numbers::pi / n;
    require(side_index >= 1 && side_index <= n, "side_index out of range");
    require(std::isfinite(theta) && std::abs(theta) <= half,
            "theta must lie in [-pi/N, +pi/N]");
    return SideCoordinate{side_index, theta + (2 * side_index - 1) * half, theta};
}

double radial(const SideCoordinate& coord, const PolygonGeometry& geom) {
    return geom.apothem / std::cos(coord.theta);
}

double q_of_xi(const SideCoordinate& coord, const PolygonGeometry& geom) {
    return geom.apothem * std::tan(coord.theta);
}

SideCoordinate xi_of_q(double q, int side_index, const PolygonSpec& spec,
                       const PolygonGeometry& geom) {
    require_parametrizable(spec);
    require(side_index >= 1 && side_index <= spec.n_sides, "side_index out of range");
    const double half_c = 0.5 * geom.side_length;
    if (std::abs(q) > half_c) {
        // b*tan(pi/N) and c/2 agree only to rounding; snap corner values.
        const double slack = 8.0 * std::numeric_limits<double>::epsilon() * half_c;
        require(std::abs(q) - half_c <= slack, "|q| must not exceed c/2");
        q = std::copysign(half_c, q);
    }
    const double theta = std::atan2(q, geom.apothem);
    return side_point(side_index, std::clamp(theta, -geom.half_angle, geom.half_angle), spec);
}

double arc_position(const SideCoordinate& coord, const PolygonGeometry& geom) {
    const double s = (coord.side_index - 1) * geom.side_length +
                     q_of_xi(coord, geom) + 0.5 * geom.side_length;
    // b*tan(theta) only matches +-c/2 to rounding at the corners; keep s
    // inside [0, L] exactly (s = L only at the closure point xi = 2*pi).
    return std::clamp(s, 0.0, geom.perimeter);
}

}  // namespace polyqm
