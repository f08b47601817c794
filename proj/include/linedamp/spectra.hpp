#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "linedamp/line_model.hpp"
#include "linedamp/polynomials.hpp"

namespace linedamp {

enum class SpectrumMethod { ClosedForm, AnalyticRoots, NumericOracle };

std::string to_string(SpectrumMethod m);

/// Eigenvalue set of one model. Conjugate-closed by construction (paired
/// values are stored as exact conjugates). matrix_scale is the Frobenius
/// norm of the underlying A and is the reference for all "relative to ||A||"
/// tolerances downstream.
struct Spectrum {
    std::vector<Complex> eigenvalues;  // sorted by (im, re)
    SpectrumMethod method = SpectrumMethod::NumericOracle;
    std::string source;
    double matrix_scale = 0.0;

    int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// One underdamped conjugate pair, represented by its upper-half member.
struct ResonanceMode {
    int k = 0;             // 1 = lowest damped frequency
    Complex lambda;        // im > 0
    double omega_n = 0.0;  // |lambda|, rad/s
    double f_damped_hz = 0.0;
    double sigma = 0.0;    // damping factor
};

/// Closed-form unloaded spectrum: lambda_0 = -R/L plus, for each
/// theta_k = k pi/(n+1), the two roots of the per-mode quadratic. A
/// non-negative radicand (overdamped mode) yields two real roots.
Spectrum unloaded_spectrum(const SectionParams& sec);

/// Dense eigensolve of A (balancing + Hessenberg reduction + implicitly
/// shifted QR, via Eigen). Independent oracle for the analytic routes.
Spectrum numeric_spectrum(const StateSpaceModel& model);

/// Loaded spectrum from the angle-domain root conditions f1 = 0, f2 = 0
/// (plus the persistent root -R/L), refined by a damped two-variable Newton
/// iteration seeded from the numeric oracle. Each returned root is certified
/// against the residual bounds described in the implementation.
Spectrum loaded_spectrum_analytic(const SectionParams& sec, const LoadSpec& load);

/// sigma = -re(lambda) / |lambda|.
double damping_factor(Complex lambda);

/// Extract underdamped modes (im above 1e-9 * matrix_scale), ascending in
/// damped frequency; purely real eigenvalues are excluded.
std::vector<ResonanceMode> identify_resonances(const Spectrum& spec);

/// Bijection between two equal-size spectra minimizing pairing distance,
/// built greedily from the globally closest pair outward with conjugate
/// pairs matched together. Returns (reference index, perturbed index) pairs
/// sorted by reference index.
std::vector<std::pair<int, int>> match_modes(const Spectrum& reference,
                                             const Spectrum& perturbed);

/// Largest pair distance under match_modes.
double matched_max_distance(const Spectrum& reference, const Spectrum& perturbed);

/// Frobenius norm of the unloaded A for the given section values, without
/// materializing the matrix.
double unloaded_matrix_scale(const SectionParams& sec);

}  // namespace linedamp
