#include "polyqm/verify.hpp"

#include "polyqm/classical.hpp"
#include "polyqm/geometry.hpp"
#include "polyqm/oracle.hpp"
#include "polyqm/spectrum.hpp"
#include "polyqm/wavefunction.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace polyqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Polygon {
    PolygonSpec spec;
    PolygonGeometry geom;
};

Polygon polygon(int n_sides, double radius = 1.0, double hbar = 1.0) {
    Polygon p;
    p.spec.n_sides = n_sides;
    p.spec.circumradius = radius;
    p.spec.constants.hbar = hbar;
    validate(p.spec);
    p.geom = derive_geometry(p.spec);
    return p;
}

VerifyCheck make_check(std::string suite, std::string name, double measured,
                       double bound, double lower = 0.0) {
    VerifyCheck check;
    check.suite = std::move(suite);
    check.name = std::move(name);
    check.measured = measured;
    check.bound = bound;
    check.lower = lower;
    check.pass = std::isfinite(measured) && measured >= lower && measured <= bound;
    return check;
}

double rel_gap(double value, double reference) {
    return std::abs(value / reference - 1.0);
}

// Composite Simpson rule, deliberately different from the Gauss-Legendre
// quadrature used inside the library so normalization is cross-checked by an
// independent integrator.
double simpson(const std::function<double(double)>& f, double lo, double hi,
               int panels) {
    const double h = (hi - lo) / panels;
    double acc = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

const std::vector<int> kPolygonSet = {3, 4, 6, 12};
const std::vector<Waveform> kAllForms = {Waveform::Symmetric, Waveform::Antisymmetric,
                                         Waveform::PlanePlus, Waveform::PlaneMinus};

std::vector<VerifyCheck> suite_spectrum(const VerifyOptions& opt) {
    std::vector<VerifyCheck> out;
    for (int n_sides : kPolygonSet) {
        const Polygon p = polygon(n_sides);
        const ComputedSpectrum fd = solve_periodic_q(p.spec, p.geom, opt.grid_points);
        const std::string tag = "N=" + std::to_string(n_sides);
        // The kernel eigenvalue is clean only up to eigensolver roundoff,
        // which scales with the largest eigenvalue (~1/h^2).
        const double zero_floor =
            std::max(1e-9, 64.0 * std::numeric_limits<double>::epsilon() *
                               fd.eigenvalues[fd.eigenvalues.size() - 1]);
        out.push_back(make_check("spectrum", tag + " zero mode (absolute)",
                                 std::abs(fd.eigenvalues[0]), zero_floor));
        for (int n = 1; n <= 3; ++n) {
            const double exact = energy_level(n, p.spec, p.geom).energy;
            const double err = std::max(rel_gap(fd.eigenvalues[2 * n - 1], exact),
                                        rel_gap(fd.eigenvalues[2 * n], exact));
            const std::string level = tag + " n=" + std::to_string(n);
            out.push_back(make_check("spectrum", level + " vs closed form", err, 1e-4));
            out.push_back(make_check("spectrum", level + " within a-priori bound", err,
                                     fd.estimated_error[2 * n]));
        }
    }
    return out;
}

std::vector<VerifyCheck> suite_laplace_beltrami(const VerifyOptions& opt) {
    std::vector<VerifyCheck> out;
    for (int n_sides : kPolygonSet) {
        const Polygon p = polygon(n_sides);
        const ComputedSpectrum lb = solve_laplace_beltrami(p.spec, p.geom, opt.grid_points);
        const ComputedSpectrum pq = solve_periodic_q(p.spec, p.geom, opt.grid_points);
        const std::string tag = "N=" + std::to_string(n_sides);
        out.push_back(make_check("laplace-beltrami", tag + " level 0 (absolute)",
                                 std::abs(lb.eigenvalues[0] - pq.eigenvalues[0]), 1e-6));
        for (int j = 1; j < 6; ++j) {
            out.push_back(make_check(
                "laplace-beltrami", tag + " level " + std::to_string(j),
                rel_gap(lb.eigenvalues[j], pq.eigenvalues[j]), 2e-4));
        }
    }
    return out;
}

std::vector<VerifyCheck> suite_roots(const VerifyOptions&) {
    std::vector<VerifyCheck> out;
    const Polygon p = polygon(6);
    const std::vector<double> roots = find_quantized_k(p.spec, p.geom, 20.0, 0.05);

    const std::vector<double> stated = {0.0, kTwoPi, 2.0 * kTwoPi};
    for (size_t i = 0; i < stated.size(); ++i) {
        const double err = i < roots.size()
                               ? std::abs(roots[i] - stated[i])
                               : std::numeric_limits<double>::infinity();
        out.push_back(make_check("roots", "root " + std::to_string(i), err, 1e-10));
    }

    // Every admissible wavenumber below k_max must appear, and nothing else:
    // 20 * sin(pi/6) / pi admits n = 0..3, so the count is 4 (3 pi / sin(pi/6)
    // = 6 pi = 18.85 also lies below 20).
    const size_t expected_count =
        static_cast<size_t>(std::floor(20.0 * p.spec.circumradius *
                                       std::sin(p.geom.half_angle) / std::numbers::pi)) + 1;
    out.push_back(make_check("roots", "root count",
                             std::abs(static_cast<double>(roots.size()) -
                                      static_cast<double>(expected_count)), 0.0));

    double spurious = 0.0;
    for (double root : roots) {
        const double n_near = std::round(root * p.spec.circumradius *
                                         std::sin(p.geom.half_angle) / std::numbers::pi);
        spurious = std::max(
            spurious, std::abs(root - quantized_k(static_cast<int>(n_near), p.spec, p.geom)));
    }
    out.push_back(make_check("roots", "all roots admissible", spurious, 1e-10));
    return out;
}

PolygonSpec segment_spec(double radius) {
    PolygonSpec spec;
    spec.n_sides = 2;
    spec.circumradius = radius;
    return spec;
}

std::vector<VerifyCheck> suite_well(const VerifyOptions& opt) {
    std::vector<VerifyCheck> out;
    const double pi2 = std::numbers::pi * std::numbers::pi;
    out.push_back(make_check("well", "closed form n=1 a=1",
                             rel_gap(well_level(1, segment_spec(1.0)).energy,
                                     pi2 / 8.0), 1e-15));
    out.push_back(make_check("well", "closed form n=1 a=2",
                             rel_gap(well_level(1, segment_spec(2.0)).energy,
                                     pi2 / 32.0), 1e-15));
    const ComputedSpectrum fd = solve_dirichlet_well(2.0, opt.well_grid_points);
    out.push_back(make_check("well", "finite differences n=1",
                             rel_gap(fd.eigenvalues[0], pi2 / 8.0), 1e-6));
    out.push_back(make_check("well", "ratio E2/E1 = 4",
                             std::abs(fd.eigenvalues[1] / fd.eigenvalues[0] - 4.0), 1e-5));
    return out;
}

std::vector<VerifyCheck> suite_convergence(const VerifyOptions&) {
    std::vector<VerifyCheck> out;
    const Polygon p = polygon(6);
    const double exact = energy_level(1, p.spec, p.geom).energy;
    std::vector<double> errors;
    for (int m : {256, 512, 1024}) {
        const ComputedSpectrum fd = solve_periodic_q(p.spec, p.geom, m);
        errors.push_back(rel_gap(fd.eigenvalues[1], exact));
    }
    out.push_back(make_check("convergence", "error ratio M 256 -> 512",
                             errors[0] / errors[1], 4.5, 3.5));
    out.push_back(make_check("convergence", "error ratio M 512 -> 1024",
                             errors[1] / errors[2], 4.5, 3.5));
    return out;
}

std::vector<VerifyCheck> suite_normalization(const VerifyOptions&) {
    std::vector<VerifyCheck> out;
    for (int n_sides : {3, 6}) {
        const Polygon p = polygon(n_sides);
        const std::string tag = "N=" + std::to_string(n_sides);
        for (Waveform form : kAllForms) {
            for (int n = 1; n <= 3; ++n) {
                const EnergyLevel level = energy_level(n, p.spec, p.geom);
                const WavefunctionSpec wf =
                    make_wavefunction(form, level, p.spec, p.geom);
                double integral = 0.0;
                for (int m = 0; m < n_sides; ++m) {
                    const double lo = kTwoPi * m / n_sides;
                    const double hi = kTwoPi * (m + 1) / n_sides;
                    integral += simpson(
                        [&](double xi) {
                            return std::norm(evaluate(wf, xi, p.spec, p.geom));
                        },
                        lo, hi, 2000);
                }
                out.push_back(make_check(
                    "normalization",
                    tag + " " + to_string(form) + " n=" + std::to_string(n),
                    std::abs(integral - 1.0), 1e-9));
            }
        }
        const double plane_constant = normalization_constant(
            Waveform::PlanePlus, energy_level(1, p.spec, p.geom), p.spec, p.geom,
            NormConvention::Xi);
        out.push_back(make_check("normalization", tag + " plane constant",
                                 std::abs(plane_constant - 1.0 / std::sqrt(kTwoPi)),
                                 1e-12));
    }
    return out;
}

std::vector<VerifyCheck> suite_symmetry(const VerifyOptions& opt) {
    std::vector<VerifyCheck> out;
    std::mt19937 rng(opt.probe_seed);
    for (int n_sides : {3, 6}) {
        const Polygon p = polygon(n_sides);
        const std::string tag = "N=" + std::to_string(n_sides);
        const double shift = kTwoPi / n_sides;
        std::uniform_real_distribution<double> xi_dist(0.0, kTwoPi);
        std::uniform_real_distribution<double> theta_dist(0.0, p.geom.half_angle);
        std::uniform_int_distribution<int> side_dist(1, n_sides);

        double periodicity = 0.0;
        double parity = 0.0;
        double closure = 0.0;
        for (Waveform form : kAllForms) {
            for (int n = 1; n <= 3; ++n) {
                const EnergyLevel level = energy_level(n, p.spec, p.geom);
                const WavefunctionSpec wf =
                    make_wavefunction(form, level, p.spec, p.geom);

                closure = std::max(closure,
                                   std::abs(evaluate(wf, 0.0, p.spec, p.geom) -
                                            evaluate(wf, kTwoPi, p.spec, p.geom)));
                closure = std::max(closure,
                                   check_continuity(form, level.k, p.spec, p.geom));

                for (int probe = 0; probe < 16; ++probe) {
                    const double xi = xi_dist(rng);
                    const double xi_next = std::fmod(xi + shift, kTwoPi);
                    periodicity = std::max(
                        periodicity, std::abs(evaluate(wf, xi, p.spec, p.geom) -
                                              evaluate(wf, xi_next, p.spec, p.geom)));
                }
                for (int probe = 0; probe < 8; ++probe) {
                    const int side = side_dist(rng);
                    const double theta = theta_dist(rng);
                    const auto plus =
                        evaluate(wf, side_point(side, theta, p.spec).xi, p.spec, p.geom);
                    const auto minus =
                        evaluate(wf, side_point(side, -theta, p.spec).xi, p.spec, p.geom);
                    double defect = 0.0;
                    switch (form) {
                        case Waveform::Symmetric: defect = std::abs(plus - minus); break;
                        case Waveform::Antisymmetric:
                            defect = std::abs(plus + minus);
                            break;
                        default: defect = std::abs(plus - std::conj(minus)); break;
                    }
                    parity = std::max(parity, defect);
                }
            }
        }
        out.push_back(make_check("symmetry", tag + " side-to-side periodicity",
                                 periodicity, 1e-12));
        out.push_back(make_check("symmetry", tag + " per-side parity", parity, 1e-12));
        out.push_back(
            make_check("symmetry", tag + " closure at quantized k", closure, 1e-12));

        // Away from quantization the corner defect must reproduce its analytic
        // magnitude 2 |sin(k c / 2)| for every form.
        std::uniform_real_distribution<double> k_dist(0.0, 20.0);
        double formula = 0.0;
        for (int probe = 0; probe < 12; ++probe) {
            const double k = k_dist(rng);
            const double expected =
                2.0 * std::abs(std::sin(0.5 * k * p.geom.side_length));
            for (Waveform form : kAllForms) {
                formula = std::max(formula,
                                   std::abs(check_continuity(form, k, p.spec, p.geom) -
                                            expected));
            }
        }
        out.push_back(
            make_check("symmetry", tag + " corner mismatch magnitude", formula, 1e-12));
    }
    return out;
}

std::vector<VerifyCheck> suite_classical(const VerifyOptions&) {
    std::vector<VerifyCheck> out;
    for (int n_sides : {3, 6, 1000}) {
        for (double v : {1.0, 3.0}) {
            for (double a : {1.0, 2.0}) {
                const Polygon p = polygon(n_sides, a);
                const BounceModel model = make_bounce_model(v, p.spec, p.geom);
                const std::string name = "N=" + std::to_string(n_sides) +
                                         " v=" + std::to_string(static_cast<int>(v)) +
                                         " a=" + std::to_string(static_cast<int>(a));
                out.push_back(make_check("classical", name,
                                         rel_gap(average_force(model), v * v / a),
                                         1e-13));
            }
        }
    }
    return out;
}

std::vector<VerifyCheck> suite_figures(const VerifyOptions&) {
    std::vector<VerifyCheck> out;
    const Polygon p = polygon(6);
    for (int n : {1, 2}) {
        const EnergyLevel level = energy_level(n, p.spec, p.geom);
        const WavefunctionSpec sym =
            make_wavefunction(Waveform::Symmetric, level, p.spec, p.geom);
        std::vector<double> re;
        for (const WavefunctionSample& row : sample(sym, 100, p.spec, p.geom))
            re.push_back(row.re);
        const int expected = 12 * n;
        out.push_back(make_check(
            "figures", "symmetric n=" + std::to_string(n) + " sign changes",
            std::abs(count_sign_changes(re) - expected), 0.0));

        const WavefunctionSpec anti =
            make_wavefunction(Waveform::Antisymmetric, level, p.spec, p.geom);
        const auto rows = sample(anti, 101, p.spec, p.geom);
        double midpoint = 0.0;
        for (int side = 0; side < 6; ++side)
            midpoint = std::max(midpoint, std::abs(rows[side * 101 + 50].re));
        out.push_back(make_check(
            "figures", "antisymmetric n=" + std::to_string(n) + " midpoint zeros",
            midpoint, 1e-12));
    }
    return out;
}

using SuiteFn = std::vector<VerifyCheck> (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
    {"spectrum", suite_spectrum},
    {"laplace-beltrami", suite_laplace_beltrami},
    {"roots", suite_roots},
    {"well", suite_well},
    {"convergence", suite_convergence},
    {"normalization", suite_normalization},
    {"symmetry", suite_symmetry},
    {"classical", suite_classical},
    {"figures", suite_figures},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : kSuites) names.push_back(name);
    return names;
}

std::vector<VerifyCheck> run_suite(const std::string& suite,
                                   const VerifyOptions& options) {
    std::vector<VerifyCheck> out;
    bool found = false;
    for (const auto& [name, fn] : kSuites) {
        if (suite == "all" || suite == name) {
            found = true;
            std::vector<VerifyCheck> part = fn(options);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    if (!found) throw std::invalid_argument("unknown verify suite: " + suite);
    return out;
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
    for (const VerifyCheck& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

}  // namespace polyqm
