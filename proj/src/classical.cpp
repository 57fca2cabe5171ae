#include "polyqm/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

double corner_angle(const BounceModel& model, int corner_index) {
    const int n = model.spec.n_sides;
    const int wrapped = ((corner_index % n) + n) % n;
    return kTwoPi * wrapped / n;
}

// Unit direction of travel leaving the corner at polar angle alpha.  Writing
// the chord difference with sum-to-product keeps it exact for large N, where
// differencing the vertex coordinates would cancel.
Eigen::Vector2d outgoing_direction(double alpha, double half_angle) {
    return {-std::sin(alpha + half_angle), std::cos(alpha + half_angle)};
}

}  // namespace

BounceModel make_bounce_model(double speed, const PolygonSpec& spec,
                              const PolygonGeometry& geom) {
    validate(spec);
    require(spec.n_sides >= 3, "bounce model requires N >= 3");
    require(speed > 0.0 && std::isfinite(speed), "speed must be finite and positive");
    return {speed, spec, geom};
}

CornerImpulse impulse_per_corner(const BounceModel& model, int corner_index) {
    const double alpha = corner_angle(model, corner_index);
    CornerImpulse impulse;
    impulse.magnitude = 2.0 * model.speed * std::sin(model.geom.half_angle);
    impulse.direction = {-std::cos(alpha), -std::sin(alpha)};
    return impulse;
}

double average_force(const BounceModel& model) {
    const double traversal_time = model.geom.side_length / model.speed;
    return impulse_per_corner(model).magnitude / traversal_time;
}

std::vector<BouncePoint> trace_bounces(const BounceModel& model, int num_bounces) {
    require(num_bounces >= 1, "need at least one bounce");
    std::vector<BouncePoint> trace;
    trace.reserve(num_bounces + 1);
    const double a = model.spec.circumradius;
    for (int j = 0; j <= num_bounces; ++j) {
        const double alpha = corner_angle(model, j);
        BouncePoint point;
        point.position = {a * std::cos(alpha), a * std::sin(alpha)};
        point.momentum = model.speed * outgoing_direction(alpha, model.geom.half_angle);
        trace.push_back(point);
    }
    return trace;
}

}  // namespace polyqm
