// Classical counterpart: a free particle sliding along the polygon at
// constant speed, kicked inward at every corner.  The impulse magnitude and
// the time-averaged force come straight from the corner geometry, and in the
// N -> infinity limit the average force reproduces the centripetal v^2 / a.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "polyqm/geometry.hpp"

namespace polyqm {

struct BounceModel {
    double speed = 1.0;  // constant along each side, mass = 1
    PolygonSpec spec;
    PolygonGeometry geom;
};

BounceModel make_bounce_model(double speed, const PolygonSpec& spec,
                              const PolygonGeometry& geom);

struct CornerImpulse {
    double magnitude = 0.0;
    Eigen::Vector2d direction;  // unit vector, points from the corner inward
};

struct BouncePoint {
    Eigen::Vector2d position;  // corner on the circumscribed circle
    Eigen::Vector2d momentum;  // momentum leaving that corner
};

// Momentum change at one corner.  The incoming and outgoing directions differ
// by the exterior angle 2 pi / N, so the kick has magnitude 2 v sin(pi/N) and
// points along the inward normal.
CornerImpulse impulse_per_corner(const BounceModel& model, int corner_index = 0);

// Impulse magnitude divided by the side traversal time c / v.  The sin(pi/N)
// factors cancel, so this equals the centripetal v^2 / a for every N, not
// just in the circle limit.
double average_force(const BounceModel& model);

// Corner-to-corner trajectory: num_bounces segments starting at corner 0,
// each entry holding the corner position and the momentum leaving it.  The
// returned polyline has num_bounces + 1 points and closes on the start after
// a multiple of N bounces.
std::vector<BouncePoint> trace_bounces(const BounceModel& model, int num_bounces);

}  // namespace polyqm
