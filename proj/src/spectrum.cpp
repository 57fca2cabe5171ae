#include "polyqm/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyqm {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

double quantized_k(int n, const PolygonSpec& spec, const PolygonGeometry& geom) {
    validate(spec);
    require(spec.n_sides >= 3, "quantized_k requires N >= 3; use well_level for N = 2");
    require(n >= 0, "quantum number must be >= 0");
    return n * std::numbers::pi / (spec.circumradius * std::sin(geom.half_angle));
}

EnergyLevel energy_level(int n, const PolygonSpec& spec, const PolygonGeometry& geom) {
    const double k = quantized_k(n, spec, geom);
    const double hbar = spec.constants.hbar;
    return EnergyLevel{n, k, 0.5 * hbar * hbar * k * k, n == 0 ? 1 : 2};
}

CircleLimitLevel circle_limit_level(int n, const PolygonSpec& spec) {
    validate(spec);
    require(n >= 0, "quantum number must be >= 0");
    const int nn = spec.n_sides;
    const double a = spec.circumradius;
    const double hbar = spec.constants.hbar;
    // l = k*a/N = n*pi / (N*sin(pi/N)); the (pi/N)/sin(pi/N) factor -> 1.
    const double l = n * std::numbers::pi / (nn * std::sin(std::numbers::pi / nn));
    return CircleLimitLevel{l, 0.5 * hbar * hbar * l * l / (a * a)};
}

WellLevel well_level(int n, const PolygonSpec& spec) {
    validate(spec);
    require(spec.n_sides == 2, "well_level applies to the N = 2 segment only");
    require(n >= 1, "a Dirichlet well has no n = 0 mode");
    const double a = spec.circumradius;
    const double hbar = spec.constants.hbar;
    const double npi = n * std::numbers::pi;
    return WellLevel{n, npi * npi * hbar * hbar / (8.0 * a * a)};
}

EnergyLevel perimeter_level(int j, const PolygonSpec& spec, const PolygonGeometry& geom) {
    validate(spec);
    require(spec.n_sides >= 3, "perimeter_level requires N >= 3");
    require(j >= 0, "ring index must be >= 0");
    const double hbar = spec.constants.hbar;
    const double k = 2.0 * std::numbers::pi * j / geom.perimeter;
    return EnergyLevel{j, k, 0.5 * hbar * hbar * k * k, j == 0 ? 1 : 2};
}

}  // namespace polyqm
