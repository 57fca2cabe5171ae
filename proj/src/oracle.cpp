#include "polyqm/oracle.hpp"

#include "polyqm/eigensolver.hpp"
#include "polyqm/wavefunction.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polyqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_grid(int grid_points) {
    require(grid_points >= 16, "grid_points must be >= 16");
    require(grid_points <= 4096, "grid_points capped at 4096 (dense eigensolver)");
}

double scale_factor(const OracleProblem& p) {
    return p.hbar * p.hbar / (2.0 * p.step * p.step);
}

// Dimensionless stiffness after the 1/sqrt(w) congruence; eigenvalues get the
// hbar^2 / (2 step^2) factor afterwards so the assembly stays O(1) in size.
Eigen::MatrixXd assemble_reduced(const OracleProblem& p) {
    const int m = p.grid_points;
    const Eigen::VectorXd& f = p.diffusion;
    const Eigen::VectorXd& w = p.weight;
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(m, m);
    if (p.periodic) {
        for (int i = 0; i < m; ++i) {
            const int prev = (i + m - 1) % m;
            mat(i, i) = (f[i] + f[prev]) / w[i];
            const int next = (i + 1) % m;
            const double coupling = -f[i] / std::sqrt(w[i] * w[next]);
            mat(i, next) = coupling;
            mat(next, i) = coupling;
        }
    } else {
        for (int i = 0; i < m; ++i) {
            mat(i, i) = f[i] + f[i + 1];
            if (i + 1 < m) {
                mat(i, i + 1) = -f[i + 1];
                mat(i + 1, i) = -f[i + 1];
            }
        }
    }
    return mat;
}

}  // namespace

const char* to_string(OracleKind kind) {
    switch (kind) {
        case OracleKind::PeriodicQ: return "periodic_q";
        case OracleKind::DirichletWell: return "dirichlet_well";
        case OracleKind::LaplaceBeltrami: return "laplace_beltrami_xi";
    }
    return "?";
}

OracleProblem periodic_q_problem(const PolygonSpec& spec, const PolygonGeometry& geom,
                                 int grid_points, PeriodicDomain domain) {
    validate(spec);
    require(spec.n_sides >= 3, "periodic q-grid requires N >= 3");
    check_grid(grid_points);
    OracleProblem p;
    p.kind = OracleKind::PeriodicQ;
    p.grid_points = grid_points;
    const double circumference =
        domain == PeriodicDomain::Side ? geom.side_length : geom.perimeter;
    p.step = circumference / grid_points;
    p.hbar = spec.constants.hbar;
    p.periodic = true;
    p.diffusion = Eigen::VectorXd::Ones(grid_points);
    p.weight = Eigen::VectorXd::Ones(grid_points);
    return p;
}

OracleProblem dirichlet_well_problem(double width, int grid_points, double hbar) {
    require(width > 0.0 && std::isfinite(width), "well width must be positive");
    require(hbar > 0.0, "hbar must be positive");
    check_grid(grid_points);
    OracleProblem p;
    p.kind = OracleKind::DirichletWell;
    p.grid_points = grid_points;
    p.step = width / (grid_points + 1);
    p.hbar = hbar;
    p.periodic = false;
    // diffusion[j] sits on the interface between node j-1 and node j, with
    // the walls at j = 0 and j = grid_points.
    p.diffusion = Eigen::VectorXd::Ones(grid_points + 1);
    p.weight = Eigen::VectorXd::Ones(grid_points);
    return p;
}

OracleProblem laplace_beltrami_problem(const PolygonSpec& spec,
                                       const PolygonGeometry& geom, int grid_points) {
    validate(spec);
    require(spec.n_sides >= 3, "the angular operator requires N >= 3");
    check_grid(grid_points);
    OracleProblem p;
    p.kind = OracleKind::LaplaceBeltrami;
    p.grid_points = grid_points;
    // One side in the bisector angle theta; the periodic wrap glues
    // theta = pi/N back to theta = -pi/N, which is the side-to-side
    // matching condition.  Every side carries the same profile, so one
    // side suffices.
    const double lo = -std::numbers::pi / spec.n_sides;
    p.step = kTwoPi / spec.n_sides / grid_points;
    p.hbar = spec.constants.hbar;
    p.periodic = true;
    p.diffusion.resize(grid_points);
    p.weight.resize(grid_points);
    const double b = geom.apothem;
    for (int i = 0; i < grid_points; ++i) {
        const double cn = std::cos(lo + i * p.step);
        p.weight[i] = b / (cn * cn);
        const double ch = std::cos(lo + (i + 0.5) * p.step);
        p.diffusion[i] = ch * ch / b;
    }
    return p;
}

Eigen::VectorXd flux_apply(const OracleProblem& p, const Eigen::VectorXd& x) {
    require(x.size() == p.grid_points, "vector length must match grid_points");
    const int m = p.grid_points;
    const double s = scale_factor(p);
    const Eigen::VectorXd& f = p.diffusion;
    Eigen::VectorXd y(m);
    if (p.periodic) {
        for (int i = 0; i < m; ++i) {
            const int prev = (i + m - 1) % m;
            const int next = (i + 1) % m;
            y[i] = s * (f[i] * (x[i] - x[next]) + f[prev] * (x[i] - x[prev]));
        }
    } else {
        for (int i = 0; i < m; ++i) {
            const double left = i > 0 ? x[i - 1] : 0.0;
            const double right = i + 1 < m ? x[i + 1] : 0.0;
            y[i] = s * (f[i + 1] * (x[i] - right) + f[i] * (x[i] - left));
        }
    }
    return y;
}

Eigen::MatrixXd assemble_dense(const OracleProblem& p) {
    return scale_factor(p) * assemble_reduced(p);
}

ComputedSpectrum solve(const OracleProblem& p, int levels) {
    ComputedSpectrum out;
    out.kind = p.kind;
    out.grid_points = p.grid_points;

    Eigen::VectorXd lambda;
    if (p.periodic) {
        lambda = symmetric_eigensolve(assemble_reduced(p)).eigenvalues;
    } else {
        // Tridiagonal with unit weights: skip the dense reduction entirely.
        const int m = p.grid_points;
        Eigen::VectorXd diag(m), sub(m - 1);
        for (int i = 0; i < m; ++i) diag[i] = p.diffusion[i] + p.diffusion[i + 1];
        for (int i = 0; i + 1 < m; ++i) sub[i] = -p.diffusion[i + 1];
        lambda = tridiagonal_eigenvalues(diag, sub);
    }
    lambda *= scale_factor(p);

    const double top = std::max(std::abs(lambda[lambda.size() - 1]), 1.0);
    if (lambda[0] < -std::max(1e-9, 1e-12 * top))
        throw std::runtime_error("discretized Hamiltonian lost positive semidefiniteness");

    if (levels >= 0 && levels < lambda.size()) lambda.conservativeResize(levels);
    out.eigenvalues = lambda;

    // Leading dispersion term of the three-point stencil plus a roundoff
    // allowance.  The phase advance per step is k h in q and k (dq/dtheta) h
    // in theta; the weight vector happens to be dq/dtheta exactly, so its
    // maximum covers both cases.
    const double geo = p.weight.maxCoeff();
    const double eps = std::numeric_limits<double>::epsilon();
    out.estimated_error.resize(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        const double k = std::sqrt(2.0 * std::max(lambda[i], 0.0)) / p.hbar;
        const double arg = k * p.step * geo;
        // The (1 + arg^2/15) factor covers two higher-order effects: k here
        // comes from the computed eigenvalue (low by the error itself), and
        // the dispersion series continues with -(k h)^4/360.  Eigensolver
        // roundoff is absolute at the eps * ||A|| scale, so relative to a
        // level it grows as top / level; low levels of a fine grid feel it.
        const double level = std::max(std::abs(lambda[i]), eps * top);
        out.estimated_error[i] =
            arg * arg / 12.0 * (1.0 + arg * arg / 15.0) +
            10.0 * eps * (p.grid_points + top / level);
    }
    return out;
}

ComputedSpectrum solve_periodic_q(const PolygonSpec& spec, const PolygonGeometry& geom,
                                  int grid_points, PeriodicDomain domain) {
    return solve(periodic_q_problem(spec, geom, grid_points, domain));
}

ComputedSpectrum solve_dirichlet_well(double width, int grid_points, double hbar) {
    return solve(dirichlet_well_problem(width, grid_points, hbar));
}

ComputedSpectrum solve_laplace_beltrami(const PolygonSpec& spec,
                                        const PolygonGeometry& geom, int grid_points) {
    return solve(laplace_beltrami_problem(spec, geom, grid_points));
}

std::vector<double> find_quantized_k(const PolygonSpec& spec,
                                     const PolygonGeometry& geom, double k_max,
                                     double scan_resolution) {
    validate(spec);
    require(spec.n_sides >= 3, "root scan requires N >= 3");
    require(k_max > 0.0 && std::isfinite(k_max), "k_max must be positive");
    const double half_spacing = std::numbers::pi / geom.side_length;
    require(scan_resolution > 0.0 && scan_resolution <= half_spacing,
            "scan resolution must not exceed half the root spacing pi / c");

    const auto mismatch = [&](double k) { return signed_corner_mismatch(k, spec, geom); };

    std::vector<double> grid;
    for (long i = 0; i * scan_resolution < k_max; ++i) grid.push_back(i * scan_resolution);
    grid.push_back(k_max);

    std::vector<double> roots;
    double g_prev = mismatch(grid[0]);
    if (g_prev == 0.0) roots.push_back(grid[0]);
    for (size_t i = 1; i < grid.size(); ++i) {
        const double g = mismatch(grid[i]);
        if (g == 0.0) {
            roots.push_back(grid[i]);
        } else if (g_prev != 0.0 && std::signbit(g) != std::signbit(g_prev)) {
            double lo = grid[i - 1], hi = grid[i], g_lo = g_prev;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double g_mid = mismatch(mid);
                if (g_mid == 0.0) {
                    lo = hi = mid;
                } else if (std::signbit(g_mid) == std::signbit(g_lo)) {
                    lo = mid;
                    g_lo = g_mid;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        g_prev = g;
    }
    return roots;
}

}  // namespace polyqm
