#pragma once

// Shared test helpers.  The Simpson integrator is deliberately independent of
// the project's Gauss-Legendre quadrature so that normalization and
// orthogonality checks do not verify the code with itself.

#include "polyqm/geometry.hpp"

#include <cmath>

namespace testutil {

struct Polygon {
    polyqm::PolygonSpec spec;
    polyqm::PolygonGeometry geom;
};

inline Polygon polygon(int n_sides, double radius = 1.0, double hbar = 1.0) {
    Polygon p;
    p.spec.n_sides = n_sides;
    p.spec.circumradius = radius;
    p.spec.constants.hbar = hbar;
    p.geom = polyqm::derive_geometry(p.spec);
    return p;
}

template <typename F>
double simpson(F&& f, double lo, double hi, int panels) {
    const double h = (hi - lo) / (2 * panels);
    double acc = f(lo) + f(hi);
    for (int i = 1; i < 2 * panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
    return acc * h / 3.0;
}

inline double rel_err(double measured, double reference) {
    return std::abs(measured / reference - 1.0);
}

}  // namespace testutil
