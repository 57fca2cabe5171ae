#include "polyqm/wavefunction.hpp"

#include "polyqm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyqm {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bool is_quantized(double k, const PolygonSpec& spec, const PolygonGeometry& geom) {
    if (!(std::isfinite(k) && k >= 0.0)) return false;
    const double n_est = k * spec.circumradius * std::sin(geom.half_angle) / std::numbers::pi;
    return std::abs(n_est - std::round(n_est)) <= 1e-9 * std::max(1.0, n_est);
}

// Unit-amplitude value of the form at phase k*q.
std::complex<double> unit_value(Waveform form, double kq) {
    switch (form) {
        case Waveform::PlanePlus: return {std::cos(kq), std::sin(kq)};
        case Waveform::PlaneMinus: return {std::cos(kq), -std::sin(kq)};
        case Waveform::Symmetric: return {std::cos(kq), 0.0};
        case Waveform::Antisymmetric: return {std::sin(kq), 0.0};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

const char* to_string(Waveform form) {
    switch (form) {
        case Waveform::PlanePlus: return "plane_plus";
        case Waveform::PlaneMinus: return "plane_minus";
        case Waveform::Symmetric: return "symmetric";
        case Waveform::Antisymmetric: return "antisymmetric";
    }
    return "?";
}

const char* to_string(NormConvention convention) {
    return convention == NormConvention::Xi ? "xi_measure" : "arc_measure";
}

double normalization_constant(Waveform form, const EnergyLevel& level,
                              const PolygonSpec& spec, const PolygonGeometry& geom,
                              NormConvention convention, int quadrature_points) {
    validate(spec);
    require(spec.n_sides >= 3, "wavefunctions require N >= 3");
    require(quadrature_points >= 2, "quadrature_points must be >= 2");
    require(!(form == Waveform::Antisymmetric && level.n == 0),
            "the antisymmetric form vanishes identically at n = 0");

    const double b = geom.apothem;
    const double k = level.k;
    const auto density = [&](double theta) {
        const double v = std::abs(unit_value(form, k * b * std::tan(theta)));
        const double weight = convention == NormConvention::Xi
                                  ? 1.0
                                  : b / (std::cos(theta) * std::cos(theta));
        return v * v * weight;
    };
    // All sides carry the same profile, so one side integral times N suffices.
    const double side_integral = integrate_gauss_legendre<double>(
        density, -geom.half_angle, geom.half_angle, quadrature_points);
    return 1.0 / std::sqrt(spec.n_sides * side_integral);
}

WavefunctionSpec make_wavefunction(Waveform form, const EnergyLevel& level,
                                   const PolygonSpec& spec, const PolygonGeometry& geom,
                                   NormConvention convention, int quadrature_points) {
    require(is_quantized(level.k, spec, geom),
            "wavenumber does not satisfy the quantization condition");
    WavefunctionSpec wf;
    wf.level = level;
    wf.form = form;
    wf.norm_convention = convention;
    wf.norm_constant =
        normalization_constant(form, level, spec, geom, convention, quadrature_points);
    return wf;
}

std::complex<double> evaluate(const WavefunctionSpec& wf, double xi,
                              const PolygonSpec& spec, const PolygonGeometry& geom) {
    require(is_quantized(wf.level.k, spec, geom),
            "wavenumber does not satisfy the quantization condition");
    const SideCoordinate coord = locate(xi, spec);
    const double q = q_of_xi(coord, geom);
    return wf.norm_constant * unit_value(wf.form, wf.level.k * q);
}

double check_continuity(Waveform form, double k, const PolygonSpec& spec,
                        const PolygonGeometry& geom) {
    validate(spec);
    require(spec.n_sides >= 3, "wavefunctions require N >= 3");
    require(std::isfinite(k) && k >= 0.0, "k must be finite and >= 0");

    const double b = geom.apothem;
    const double h = geom.half_angle;
    // theta = +h is the corner seen from side m, theta = -h the same point
    // seen from side m+1 (the profile is identical on every side, xi enters
    // only through theta).  The xi = 0 vs xi = 2*pi closure is the same pair
    // with m = N.
    const double q_hi = b * std::tan(h);
    const double q_lo = b * std::tan(-h);

    double sup = 0.0;
    for (int corner = 1; corner <= spec.n_sides; ++corner) {
        double mismatch;
        if (form == Waveform::Symmetric) {
            // cos(k q) is value-continuous for every k; the defect sits in the
            // q-derivative, -k sin(k q).  Scale by 1/k to match the others.
            const double jump =
                std::abs(-k * std::sin(k * q_hi) - (-k * std::sin(k * q_lo)));
            mismatch = k > 0.0 ? jump / k : 0.0;
        } else {
            mismatch = std::abs(unit_value(form, k * q_hi) - unit_value(form, k * q_lo));
        }
        sup = std::max(sup, mismatch);
    }
    return sup;
}

double signed_corner_mismatch(double k, const PolygonSpec& spec,
                              const PolygonGeometry& geom) {
    validate(spec);
    const double q_corner = geom.apothem * std::tan(geom.half_angle);
    const std::complex<double> jump =
        unit_value(Waveform::PlanePlus, k * q_corner) -
        unit_value(Waveform::PlanePlus, -k * q_corner);
    return jump.imag();  // 2 sin(k c / 2)
}

std::vector<WavefunctionSample> sample(const WavefunctionSpec& wf, int samples_per_side,
                                       const PolygonSpec& spec,
                                       const PolygonGeometry& geom) {
    require(samples_per_side >= 2, "samples_per_side must be >= 2");
    require(is_quantized(wf.level.k, spec, geom),
            "wavenumber does not satisfy the quantization condition");
    validate(spec);
    require(spec.n_sides >= 3, "wavefunctions require N >= 3");

    std::vector<WavefunctionSample> rows;
    rows.reserve(static_cast<size_t>(spec.n_sides) * samples_per_side);
    const double h = geom.half_angle;
    for (int m = 1; m <= spec.n_sides; ++m) {
        for (int j = 0; j < samples_per_side; ++j) {
            const double theta = -h + 2.0 * h * j / (samples_per_side - 1);
            const SideCoordinate coord = side_point(m, theta, spec);
            const double q = q_of_xi(coord, geom);
            const std::complex<double> v =
                wf.norm_constant * unit_value(wf.form, wf.level.k * q);
            rows.push_back({coord.xi, m, q, arc_position(coord, geom), v.real(), v.imag()});
        }
    }
    return rows;
}

int count_sign_changes(const std::vector<double>& values, double deadband) {
    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double cutoff = deadband * scale;
    int changes = 0;
    int last_sign = 0;
    for (double v : values) {
        if (std::abs(v) <= cutoff) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++changes;
        last_sign = sign;
    }
    return changes;
}

}  // namespace polyqm
