// Independent numerical checks on the closed-form spectrum.  Three
// second-order finite-difference Hamiltonians are assembled and diagonalized
// without reference to the quantization condition:
//
//   PeriodicQ        free particle on a ring in the flattened coordinate q,
//                    circumference either one side length or the perimeter
//   DirichletWell    infinite well of a given width (the N = 2 limit)
//   LaplaceBeltrami  the angular operator in xi with the metric factors kept,
//                    discretized in flux form and symmetrized by a congruence
//                    with the diagonal weight w(theta) = b / cos^2(theta)
//
// Eigenvalues come back sorted with an a-priori relative error estimate per
// level: the leading (k h)^2 / 12 dispersion term of the three-point stencil
// plus a roundoff allowance.  find_quantized_k scans the corner mismatch of
// the plane-wave form for sign changes and bisects, recovering the admissible
// wavenumbers with no input from the closed-form spectrum.

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "polyqm/geometry.hpp"

namespace polyqm {

enum class OracleKind { PeriodicQ, DirichletWell, LaplaceBeltrami };

enum class PeriodicDomain { Side, Perimeter };

const char* to_string(OracleKind kind);

// A fully assembled discretization, kept around so tests can inspect the
// coefficients and apply the operator matrix-free.
struct OracleProblem {
    OracleKind kind = OracleKind::PeriodicQ;
    int grid_points = 0;     // number of unknowns
    double step = 0.0;       // mesh spacing in the native coordinate
    double hbar = 1.0;
    bool periodic = true;
    Eigen::VectorXd diffusion;  // flux coefficient at half-grid points
    Eigen::VectorXd weight;     // measure weight at nodes (all ones except LB)
};

struct ComputedSpectrum {
    OracleKind kind = OracleKind::PeriodicQ;
    int grid_points = 0;
    Eigen::VectorXd eigenvalues;      // ascending
    Eigen::VectorXd estimated_error;  // a-priori relative bound per level
};

OracleProblem periodic_q_problem(const PolygonSpec& spec, const PolygonGeometry& geom,
                                 int grid_points,
                                 PeriodicDomain domain = PeriodicDomain::Side);
OracleProblem dirichlet_well_problem(double width, int grid_points, double hbar = 1.0);
OracleProblem laplace_beltrami_problem(const PolygonSpec& spec,
                                       const PolygonGeometry& geom, int grid_points);

// Applies the flux-form stiffness operator (before the 1/weight congruence)
// to a vector.  Row i only ever sees differences of neighbouring entries, so
// constants map to exact zeros in floating point.
Eigen::VectorXd flux_apply(const OracleProblem& problem, const Eigen::VectorXd& x);

// Dense symmetric matrix of the full (weighted) Hamiltonian, mostly for tests.
Eigen::MatrixXd assemble_dense(const OracleProblem& problem);

ComputedSpectrum solve(const OracleProblem& problem, int levels = -1);

ComputedSpectrum solve_periodic_q(const PolygonSpec& spec, const PolygonGeometry& geom,
                                  int grid_points,
                                  PeriodicDomain domain = PeriodicDomain::Side);
ComputedSpectrum solve_dirichlet_well(double width, int grid_points, double hbar = 1.0);
ComputedSpectrum solve_laplace_beltrami(const PolygonSpec& spec,
                                        const PolygonGeometry& geom, int grid_points);

// All admissible wavenumbers in [0, k_max], found by scanning the signed
// corner mismatch at the given resolution and bisecting each bracket down to
// 1e-12.  The resolution must stay below half the root spacing pi / c.
std::vector<double> find_quantized_k(const PolygonSpec& spec,
                                     const PolygonGeometry& geom, double k_max,
                                     double scan_resolution);

}  // namespace polyqm
