#pragma once

// Piecewise eigenfunctions on the polygon.
//
// On side m the stationary states are plane waves in the flattening
// coordinate, psi_m(xi) = A exp(+-i k b tan(theta)), or the real
// symmetric/antisymmetric combinations A_s cos(k b tan(theta)) and
// A_a sin(k b tan(theta)) about the side midpoint.  The plane-wave constant
// under the xi measure is A = 1/sqrt(2*pi); the real-form constants have no
// closed form and are computed by quadrature.

#include "polyqm/geometry.hpp"
#include "polyqm/spectrum.hpp"

#include <complex>
#include <vector>

namespace polyqm {

enum class Waveform { PlanePlus, PlaneMinus, Symmetric, Antisymmetric };

// The normalization measure.  Xi integrates |psi|^2 d(xi) as in the model's
// normalization condition; Arc integrates along physical arc length,
// dq = b sec^2(theta) d(theta).  Outputs always record which one was used.
enum class NormConvention { Xi, Arc };

const char* to_string(Waveform form);
const char* to_string(NormConvention convention);

struct WavefunctionSpec {
    EnergyLevel level;
    Waveform form = Waveform::PlanePlus;
    double norm_constant = 0.0;
    NormConvention norm_convention = NormConvention::Xi;
};

// One exported point of a sampled wavefunction.
struct WavefunctionSample {
    double xi = 0.0;
    int side_index = 0;
    double q = 0.0;
    double s = 0.0;   // arc position
    double re = 0.0;
    double im = 0.0;  // identically 0 for the real forms
};

// Normalization constant for the given form/level/convention, computed with a
// Gauss-Legendre rule of `quadrature_points` (>= 512 recommended) per side.
// Rejects the antisymmetric form at n = 0 (the zero function).
double normalization_constant(Waveform form, const EnergyLevel& level,
                              const PolygonSpec& spec, const PolygonGeometry& geom,
                              NormConvention convention, int quadrature_points = 512);

WavefunctionSpec make_wavefunction(Waveform form, const EnergyLevel& level,
                                   const PolygonSpec& spec, const PolygonGeometry& geom,
                                   NormConvention convention = NormConvention::Xi,
                                   int quadrature_points = 512);

// psi(xi).  Rejects a level whose k does not satisfy the quantization
// condition (the piecewise function would be discontinuous at the corners;
// check_continuity is the probe for arbitrary k).
std::complex<double> evaluate(const WavefunctionSpec& wf, double xi,
                              const PolygonSpec& spec, const PolygonGeometry& geom);

// Corner-matching defect of the unit-amplitude form at wavenumber k (k need
// not be quantized).  Returns the sup over all N corners of the side-to-side
// mismatch, including the xi = 0 / xi = 2*pi closure.  For the value-continuous
// symmetric form the defect lives in the q-derivative; it is scaled by 1/k to
// the same units as the others.  Analytically the result is 2|sin(k c / 2)|
// for every form, vanishing exactly at the quantized wavenumbers.
double check_continuity(Waveform form, double k, const PolygonSpec& spec,
                        const PolygonGeometry& geom);

// Signed corner mismatch of the unit-amplitude plane wave, 2 sin(k c / 2);
// the root-finding oracle bisects its sign changes.
double signed_corner_mismatch(double k, const PolygonSpec& spec,
                              const PolygonGeometry& geom);

// samples_per_side points per side, uniform in theta and including both
// corners, ordered by arc position.  N * samples_per_side rows.
std::vector<WavefunctionSample> sample(const WavefunctionSpec& wf, int samples_per_side,
                                       const PolygonSpec& spec,
                                       const PolygonGeometry& geom);

// Sign changes of a sampled sequence with a deadband: samples with
// |v| <= deadband * max|v| are treated as exact zeros and skipped, so corner
// and midpoint zeros do not double-count.
int count_sign_changes(const std::vector<double>& values, double deadband = 1e-14);

}  // namespace polyqm
