#pragma once

// Gauss-Legendre quadrature.  Nodes are the Legendre roots found by Newton
// iteration from the Chebyshev initial guess; for the analytic integrands in
// this project a single high-order rule converges far below the tolerances
// we care about.

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyqm {

template <typename Scalar>
struct QuadratureRule {
    Eigen::Vector<Scalar, Eigen::Dynamic> nodes;
    Eigen::Vector<Scalar, Eigen::Dynamic> weights;
};

// Rule of `points` nodes on [lo, hi].
template <typename Scalar>
QuadratureRule<Scalar> gauss_legendre(int points, Scalar lo, Scalar hi) {
    if (points < 1) throw std::invalid_argument("quadrature needs at least one point");
    QuadratureRule<Scalar> rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);

    const Scalar eps = std::numeric_limits<Scalar>::epsilon() * 16;
    const Scalar mid = (hi + lo) / 2;
    const Scalar halfwidth = (hi - lo) / 2;
    const int m = (points + 1) / 2;

    for (int i = 1; i <= m; ++i) {
        Scalar z = std::cos(std::numbers::pi_v<Scalar> * (i - Scalar(0.25)) /
                            (points + Scalar(0.5)));
        Scalar z1, pp;
        do {
            // Legendre recurrence up to P_points and its derivative at z.
            Scalar p1 = 1, p2 = 0;
            for (int j = 1; j <= points; ++j) {
                const Scalar p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
            }
            pp = points * (z * p1 - p2) / (z * z - 1);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > eps);
        rule.nodes[i - 1] = mid - halfwidth * z;
        rule.nodes[points - i] = mid + halfwidth * z;
        rule.weights[i - 1] = 2 * halfwidth / ((1 - z * z) * pp * pp);
        rule.weights[points - i] = rule.weights[i - 1];
    }
    return rule;
}

template <typename Scalar, typename F>
Scalar integrate(const QuadratureRule<Scalar>& rule, F&& f) {
    Scalar acc = 0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

template <typename Scalar, typename F>
Scalar integrate_gauss_legendre(F&& f, Scalar lo, Scalar hi, int points) {
    return integrate(gauss_legendre<Scalar>(points, lo, hi), std::forward<F>(f));
}

}  // namespace polyqm
