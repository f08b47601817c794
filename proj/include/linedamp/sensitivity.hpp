#pragma once

#include <complex>
#include <vector>

#include "linedamp/polynomials.hpp"
#include "linedamp/spectra.hpp"

namespace linedamp {

/// Unloaded expansion point for mode k: theta* = k pi/(n+1) and the
/// closed-form eigenvalue on the positive-imaginary branch (the conjugate
/// mode's sensitivity is the conjugate value).
struct OperatingPoint {
    Complex lambda_star;
    double theta_star = 0.0;
    int k = 0;
    double g_total = 0.0;  // = G : expansion around the unloaded case
};

OperatingPoint make_operating_point(const SectionParams& sec, int k);

struct PartialDerivatives {
    Complex dF1_dGL;
    Complex dF1_dlambda;
    Complex dF1_dtheta;
    Complex dF2_dtheta;
    Complex dF2_dlambda;
};

/// The five closed-form partial derivatives of f1/f2 at the operating point.
/// j must be odd, 1 <= j <= 2n-1.
PartialDerivatives partial_derivatives(const OperatingPoint& op, int j,
                                       const SectionParams& sec);

/// d(lambda)/d(G_L) at the operating point. Exact mode assembles the
/// implicit-function quotient from the five partials; approximate mode (first
/// resonance only) uses the simplified closed form with leading factor 1/2C.
/// The two differ slightly by construction and are never substituted
/// silently. j is not required to be odd here so the formula can also be
/// evaluated at the virtual center j = n for even n.
Complex eigenvalue_sensitivity(const OperatingPoint& op, int j, const SectionParams& sec,
                               bool approximate = false);

struct SensitivityPoint {
    int j = 0;  // odd
    int z = 0;  // (j+1)/2
    Complex dlambda_dGL;
};

/// Sensitivity of mode k per candidate load index, all odd j in [1, 2n-1].
/// Symmetric about j = n.
struct SensitivityProfile {
    int n = 0;
    int k = 0;
    SectionParams sec;
    std::vector<SensitivityPoint> points;
};

SensitivityProfile sensitivity_profile(const SectionParams& sec, int k);

/// Node index maximizing -re(sensitivity) for mode k; ties break toward the
/// smaller z.
int optimal_location(const SectionParams& sec, int k);

/// Central finite-difference oracle: track mode k of the numeric spectrum
/// while the diagonal entry at node z = (j+1)/2 moves by -/+ delta_g/C.
Complex fd_sensitivity(const SectionParams& sec, int k, int j, double delta_g = 1e-6);

}  // namespace linedamp
