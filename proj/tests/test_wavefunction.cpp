#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyqm/spectrum.hpp"
#include "polyqm/wavefunction.hpp"
#include "support.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

using namespace polyqm;
using testutil::polygon;
using testutil::Polygon;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

WavefunctionSpec make(const Polygon& p, Waveform form, int n,
                      NormConvention convention = NormConvention::Xi) {
    return make_wavefunction(form, energy_level(n, p.spec, p.geom), p.spec,
                             p.geom, convention);
}

// Independent Simpson quadrature of f over side 1 in xi, times N; the
// side-to-side symmetry makes this the full-polygon integral.
template <typename F>
std::complex<double> integrate_sides(const Polygon& p, F&& f, int panels = 2000) {
    const double hi = kTwoPi / p.spec.n_sides;
    const double re =
        testutil::simpson([&](double xi) { return f(xi).real(); }, 0.0, hi, panels);
    const double im =
        testutil::simpson([&](double xi) { return f(xi).imag(); }, 0.0, hi, panels);
    return std::complex<double>(re, im) * double(p.spec.n_sides);
}

}  // namespace

TEST_CASE("normalization constants under the xi measure (frozen by quadrature)") {
    const double as3[] = {0.55705785888498492, 0.56496909656684664,
                          0.56466847284702095};
    const double aa3[] = {0.57160242547467334, 0.56341328823691952,
                          0.56371191060816958};
    const double as6[] = {0.56726096046291672, 0.56493672961061343,
                          0.56451955359675401};
    const double aa6[] = {0.56116756139448805, 0.56344539403589845,
                          0.56386019144031856};

    const auto tri = polygon(3);
    const auto hex = polygon(6);
    for (int n = 1; n <= 3; ++n) {
        CHECK(make(tri, Waveform::Symmetric, n).norm_constant ==
              doctest::Approx(as3[n - 1]).epsilon(1e-12));
        CHECK(make(tri, Waveform::Antisymmetric, n).norm_constant ==
              doctest::Approx(aa3[n - 1]).epsilon(1e-12));
        CHECK(make(hex, Waveform::Symmetric, n).norm_constant ==
              doctest::Approx(as6[n - 1]).epsilon(1e-12));
        CHECK(make(hex, Waveform::Antisymmetric, n).norm_constant ==
              doctest::Approx(aa6[n - 1]).epsilon(1e-12));
    }
}

TEST_CASE("plane-wave constant is 1/sqrt(2 pi) for every N and n") {
    const double expected = 0.39894228040143268;
    for (int n_sides : {3, 6}) {
        const auto p = polygon(n_sides);
        for (int n : {0, 1, 2, 3}) {
            if (n > 0)
                CHECK(make(p, Waveform::PlaneMinus, n).norm_constant ==
                      doctest::Approx(expected).epsilon(1e-12));
            CHECK(make(p, Waveform::PlanePlus, n).norm_constant ==
                  doctest::Approx(expected).epsilon(1e-12));
        }
        // The constant mode reduces to the plane case.
        CHECK(make(p, Waveform::Symmetric, 0).norm_constant ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("normalization constants under the arc measure have closed forms") {
    for (int n_sides : {3, 6}) {
        const auto p = polygon(n_sides);
        const double sym_anti = std::sqrt(2.0 / p.geom.perimeter);
        const double plane = 1.0 / std::sqrt(p.geom.perimeter);
        for (int n = 1; n <= 3; ++n) {
            CHECK(make(p, Waveform::Symmetric, n, NormConvention::Arc)
                      .norm_constant == doctest::Approx(sym_anti).epsilon(1e-12));
            CHECK(make(p, Waveform::Antisymmetric, n, NormConvention::Arc)
                      .norm_constant == doctest::Approx(sym_anti).epsilon(1e-12));
            CHECK(make(p, Waveform::PlanePlus, n, NormConvention::Arc)
                      .norm_constant == doctest::Approx(plane).epsilon(1e-12));
        }
        CHECK(make(p, Waveform::Symmetric, 0, NormConvention::Arc).norm_constant ==
              doctest::Approx(plane).epsilon(1e-12));
    }
}

TEST_CASE("normalized wavefunctions integrate to one (independent quadrature)") {
    const auto hex = polygon(6);
    const auto tri = polygon(3);

    const WavefunctionSpec sym = make(hex, Waveform::Symmetric, 1);
    const double norm_sym =
        integrate_sides(hex, [&](double xi) {
            return std::complex<double>(std::norm(evaluate(sym, xi, hex.spec, hex.geom)), 0.0);
        }).real();
    CHECK(std::abs(norm_sym - 1.0) < 1e-9);

    const WavefunctionSpec anti = make(tri, Waveform::Antisymmetric, 2);
    const double norm_anti =
        integrate_sides(tri, [&](double xi) {
            return std::complex<double>(std::norm(evaluate(anti, xi, tri.spec, tri.geom)), 0.0);
        }).real();
    CHECK(std::abs(norm_anti - 1.0) < 1e-9);

    // Arc-measure normalization integrates against the physical line element.
    const WavefunctionSpec plane = make(hex, Waveform::PlanePlus, 1, NormConvention::Arc);
    const double b = hex.geom.apothem;
    const double norm_arc =
        integrate_sides(hex, [&](double xi) {
            const double theta = locate(xi, hex.spec).theta;
            const double w = b / (std::cos(theta) * std::cos(theta));
            return std::complex<double>(
                std::norm(evaluate(plane, xi, hex.spec, hex.geom)) * w, 0.0);
        }).real();
    CHECK(std::abs(norm_arc - 1.0) < 1e-9);
}

TEST_CASE("antisymmetric n = 0 is rejected as unnormalizable") {
    const auto hex = polygon(6);
    const EnergyLevel ground = energy_level(0, hex.spec, hex.geom);
    CHECK_THROWS_AS(normalization_constant(Waveform::Antisymmetric, ground,
                                           hex.spec, hex.geom, NormConvention::Xi),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_wavefunction(Waveform::Antisymmetric, ground, hex.spec, hex.geom),
        std::invalid_argument);
}

TEST_CASE("unquantized wavenumbers are rejected") {
    const auto hex = polygon(6);
    EnergyLevel off;
    off.n = 1;
    off.k = 1.234;  // not a multiple of 2 pi
    off.energy = off.k * off.k / 2.0;
    CHECK_THROWS_AS(make_wavefunction(Waveform::Symmetric, off, hex.spec, hex.geom),
                    std::invalid_argument);

    WavefunctionSpec wf = make(hex, Waveform::Symmetric, 1);
    wf.level.k = 1.234;
    CHECK_THROWS_AS(evaluate(wf, 0.5, hex.spec, hex.geom), std::invalid_argument);
    CHECK_THROWS_AS(sample(wf, 10, hex.spec, hex.geom), std::invalid_argument);
}

TEST_CASE("pointwise values at midpoints and corners") {
    const auto hex = polygon(6);
    const double mid = kPi / 6.0;  // midpoint of side 1

    const WavefunctionSpec sym = make(hex, Waveform::Symmetric, 1);
    const std::complex<double> at_mid = evaluate(sym, mid, hex.spec, hex.geom);
    CHECK(at_mid.real() == doctest::Approx(sym.norm_constant).epsilon(1e-14));
    CHECK(at_mid.imag() == 0.0);

    const WavefunctionSpec anti = make(hex, Waveform::Antisymmetric, 1);
    CHECK(std::abs(evaluate(anti, mid, hex.spec, hex.geom)) < 1e-14);

    // Plane wave at the side-1 corner: phase k c/2 = pi flips the sign.
    const WavefunctionSpec plane = make(hex, Waveform::PlanePlus, 1);
    const std::complex<double> at_corner =
        evaluate(plane, kPi / 3.0, hex.spec, hex.geom);
    CHECK(at_corner.real() ==
          doctest::Approx(-plane.norm_constant).epsilon(1e-12));
    CHECK(std::abs(at_corner.imag()) < 1e-12);

    // The plane form is unimodular: |psi| = A everywhere.
    for (int i = 0; i <= 300; ++i) {
        const double xi = kTwoPi * i / 300.0;
        CHECK(std::abs(std::abs(evaluate(plane, xi, hex.spec, hex.geom)) -
                       plane.norm_constant) < 1e-14);
    }
}

TEST_CASE("per-side parity in the bisector angle") {
    std::mt19937 rng(777001);
    for (int n_sides : {3, 6}) {
        const auto p = polygon(n_sides);
        std::uniform_real_distribution<double> uni(0.0, p.geom.half_angle);
        const WavefunctionSpec sym = make(p, Waveform::Symmetric, 2);
        const WavefunctionSpec anti = make(p, Waveform::Antisymmetric, 2);
        const WavefunctionSpec plane = make(p, Waveform::PlanePlus, 1);
        for (int i = 0; i < 100; ++i) {
            const double theta = uni(rng);
            const double plus = side_point(1, theta, p.spec).xi;
            const double minus = side_point(1, -theta, p.spec).xi;

            CHECK(std::abs(evaluate(sym, plus, p.spec, p.geom) -
                           evaluate(sym, minus, p.spec, p.geom)) < 1e-12);
            CHECK(std::abs(evaluate(anti, plus, p.spec, p.geom) +
                           evaluate(anti, minus, p.spec, p.geom)) < 1e-12);
            CHECK(std::abs(evaluate(plane, plus, p.spec, p.geom) -
                           std::conj(evaluate(plane, minus, p.spec, p.geom))) <
                  1e-12);
        }
    }
}

TEST_CASE("N-fold rotational symmetry: each side carries the same profile") {
    const Waveform forms[] = {Waveform::PlanePlus, Waveform::PlaneMinus,
                              Waveform::Symmetric, Waveform::Antisymmetric};
    for (int n_sides : {3, 6}) {
        const auto p = polygon(n_sides);
        const double span = kTwoPi / n_sides;
        for (int n : {1, 2}) {
            for (Waveform form : forms) {
                const WavefunctionSpec wf = make(p, form, n);
                double worst = 0.0;
                for (int m = 1; m <= n_sides; ++m) {
                    for (int i = 1; i <= 50; ++i) {
                        const double xi = (m - 1) * span + span * i / 51.0;
                        double shifted = xi + span;
                        if (shifted > kTwoPi) shifted -= kTwoPi;
                        worst = std::max(
                            worst, std::abs(evaluate(wf, xi, p.spec, p.geom) -
                                            evaluate(wf, shifted, p.spec, p.geom)));
                    }
                }
                CHECK(worst < 1e-12);
            }
        }
    }
}

TEST_CASE("orthogonality holds under the arc measure") {
    const auto hex = polygon(6);
    const double b = hex.geom.apothem;
    const WavefunctionSpec one = make(hex, Waveform::PlanePlus, 1);
    const WavefunctionSpec two = make(hex, Waveform::PlanePlus, 2);

    const std::complex<double> overlap = integrate_sides(hex, [&](double xi) {
        const double theta = locate(xi, hex.spec).theta;
        const double w = b / (std::cos(theta) * std::cos(theta));
        return std::conj(evaluate(one, xi, hex.spec, hex.geom)) *
               evaluate(two, xi, hex.spec, hex.geom) * w;
    });
    CHECK(std::abs(overlap) < 1e-8);

    // Symmetric x antisymmetric cross terms vanish by parity in any measure.
    const WavefunctionSpec sym = make(hex, Waveform::Symmetric, 2);
    const WavefunctionSpec anti = make(hex, Waveform::Antisymmetric, 2);
    const std::complex<double> cross = integrate_sides(hex, [&](double xi) {
        return std::conj(evaluate(sym, xi, hex.spec, hex.geom)) *
               evaluate(anti, xi, hex.spec, hex.geom);
    });
    CHECK(std::abs(cross) < 1e-12);
}

TEST_CASE("the xi measure mixes different levels (frozen overlaps)") {
    // xi is not arc length, so distinct levels are not orthogonal under
    // d(xi); these regression values document the effect.
    const auto hex = polygon(6);
    const WavefunctionSpec p1 = make(hex, Waveform::PlanePlus, 1);
    const WavefunctionSpec p2 = make(hex, Waveform::PlanePlus, 2);
    const WavefunctionSpec m1 = make(hex, Waveform::PlaneMinus, 1);
    const WavefunctionSpec s1 = make(hex, Waveform::Symmetric, 1);
    const WavefunctionSpec s2 = make(hex, Waveform::Symmetric, 2);

    const auto xi_overlap = [&](const WavefunctionSpec& u, const WavefunctionSpec& v) {
        return integrate_sides(hex, [&](double xi) {
            return std::conj(evaluate(u, xi, hex.spec, hex.geom)) *
                   evaluate(v, xi, hex.spec, hex.geom);
        });
    };

    const std::complex<double> plane12 = xi_overlap(p1, p2);
    CHECK(plane12.real() == doctest::Approx(0.05903191654609982).epsilon(1e-7));
    CHECK(std::abs(plane12.imag()) < 1e-12);

    const std::complex<double> opposite = xi_overlap(p1, m1);
    CHECK(opposite.real() == doctest::Approx(-0.010799481365052183).epsilon(1e-6));
    CHECK(std::abs(opposite.imag()) < 1e-12);

    CHECK(xi_overlap(s1, s2).real() ==
          doctest::Approx(0.064197300209158706).epsilon(1e-7));
}

TEST_CASE("corner continuity vanishes exactly at quantized wavenumbers") {
    const Waveform forms[] = {Waveform::PlanePlus, Waveform::PlaneMinus,
                              Waveform::Symmetric, Waveform::Antisymmetric};
    for (int n_sides : {3, 6}) {
        const auto p = polygon(n_sides);
        for (int n : {0, 1, 2, 3}) {
            const double k = quantized_k(n, p.spec, p.geom);
            for (Waveform form : forms)
                CHECK(check_continuity(form, k, p.spec, p.geom) < 1e-12);
        }
    }
}

TEST_CASE("corner mismatch is 2|sin(k c / 2)| for arbitrary wavenumbers") {
    const auto hex = polygon(6);
    const double c = hex.geom.side_length;

    // Halfway to the first quantized level the defect is exactly 2.
    const double half = quantized_k(1, hex.spec, hex.geom) / 2.0;
    CHECK(check_continuity(Waveform::PlanePlus, half, hex.spec, hex.geom) ==
          doctest::Approx(2.0).epsilon(1e-12));

    std::mt19937 rng(55118822);
    std::uniform_real_distribution<double> uni(0.0, 20.0);
    const Waveform forms[] = {Waveform::PlanePlus, Waveform::PlaneMinus,
                              Waveform::Symmetric, Waveform::Antisymmetric};
    for (int i = 0; i < 12; ++i) {
        const double k = uni(rng);
        const double expected = 2.0 * std::abs(std::sin(k * c / 2.0));
        for (Waveform form : forms)
            CHECK(std::abs(check_continuity(form, k, hex.spec, hex.geom) -
                           expected) < 1e-12);
    }

    CHECK_THROWS_AS(check_continuity(Waveform::PlanePlus, -1.0, hex.spec, hex.geom),
                    std::invalid_argument);
}

TEST_CASE("signed corner mismatch changes sign across each root") {
    const auto hex = polygon(6);
    const double c = hex.geom.side_length;
    CHECK(signed_corner_mismatch(kPi / c, hex.spec, hex.geom) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(signed_corner_mismatch(3.0 * kPi / c, hex.spec, hex.geom) ==
          doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(signed_corner_mismatch(kTwoPi / c, hex.spec, hex.geom)) < 1e-12);

    std::mt19937 rng(90125);
    std::uniform_real_distribution<double> uni(0.0, 20.0);
    for (int i = 0; i < 20; ++i) {
        const double k = uni(rng);
        CHECK(signed_corner_mismatch(k, hex.spec, hex.geom) ==
              doctest::Approx(2.0 * std::sin(k * c / 2.0)).epsilon(1e-12));
    }
}

TEST_CASE("sampling produces ordered rows with both corners per side") {
    const auto hex = polygon(6);
    const WavefunctionSpec sym = make(hex, Waveform::Symmetric, 1);
    const auto rows = sample(sym, 100, hex.spec, hex.geom);
    REQUIRE(rows.size() == 600);

    double prev_s = -1.0;
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].side_index == int(i / 100) + 1);
        // Corners repeat; the two sides compute the seam arc length from
        // opposite ends, so allow an ulp-level disagreement there.
        CHECK(rows[i].s >= prev_s - 1e-12);
        CHECK(rows[i].im == 0.0);
        prev_s = rows[i].s;
    }
    // First and last sample of a side sit on its corners.
    CHECK(rows[0].q == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(rows[99].q == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(sample(sym, 1, hex.spec, hex.geom), std::invalid_argument);
}

TEST_CASE("hexagon crossing counts match the expected nodal structure") {
    const auto hex = polygon(6);
    for (int n : {1, 2}) {
        const WavefunctionSpec sym = make(hex, Waveform::Symmetric, n);
        std::vector<double> re;
        for (const auto& row : sample(sym, 100, hex.spec, hex.geom))
            re.push_back(row.re);
        CHECK(count_sign_changes(re) == 12 * n);

        const WavefunctionSpec anti = make(hex, Waveform::Antisymmetric, n);
        const auto rows = sample(anti, 101, hex.spec, hex.geom);
        for (int side = 0; side < 6; ++side)
            CHECK(std::abs(rows[side * 101 + 50].re) < 1e-12);
    }

    // The plane form never crosses: constant modulus, no real-axis pinning.
    const WavefunctionSpec plane = make(hex, Waveform::PlanePlus, 1);
    for (const auto& row : sample(plane, 100, hex.spec, hex.geom))
        CHECK(std::abs(std::hypot(row.re, row.im) - plane.norm_constant) < 1e-12);
}

TEST_CASE("sign-change counting uses a relative deadband") {
    CHECK(count_sign_changes({1.0, -1.0, 1.0}) == 2);
    CHECK(count_sign_changes({1.0, 0.0, -1.0}) == 1);
    CHECK(count_sign_changes({1.0, -1e-16, 1.0}) == 0);  // below deadband
    CHECK(count_sign_changes({-3.0, -2.0, -1.0}) == 0);
    CHECK(count_sign_changes({}) == 0);
    CHECK(count_sign_changes({0.0, 0.0}) == 0);
    CHECK(count_sign_changes({1.0, -0.5, 1.0}, 0.6) == 0);
}
