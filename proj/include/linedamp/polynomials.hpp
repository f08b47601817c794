#pragma once

#include <complex>

#include "linedamp/line_model.hpp"
#include "linedamp/scaled_complex.hpp"

namespace linedamp {

using Complex = std::complex<double>;

/// Chebyshev polynomial of the second kind, U_n(x), by the standard
/// three-term recurrence U_{n+1} = 2x U_n - U_{n-1}, U_0 = 1, U_1 = 2x.
/// Satisfies U_n(cos t) = sin((n+1)t)/sin(t).
Complex chebyshev_u(int n, Complex x);

/// Overflow-safe variant for |x| >> 1 or large n.
ScaledComplex chebyshev_u_scaled(int n, Complex x);

/// g(lambda) = (lambda + R/L)(lambda + G/C).
Complex g_poly(Complex lambda, const SectionParams& sec);

/// P_n(lambda) = (1/(LC)^n) U_n(LC lambda / 2 + 1); P_{-1} = 0 by convention.
/// Scaled form: the (1/LC)^n factor alone exceeds double range for n = 60.
ScaledComplex p_n(int n, Complex lambda, const SectionParams& sec);

/// Characteristic polynomial of the odd-order (2n+1) unloaded cascade block:
/// delta_{2n+1}(lambda) = (lambda + R/L) P_n(g(lambda)).
ScaledComplex char_poly_odd(int n, Complex lambda, const SectionParams& sec);

/// Even-order block: delta_{2n}(lambda) = P_n(g) - (1/LC) P_{n-1}(g).
/// n = 0 gives delta_0 = 1 (sentinel convention).
ScaledComplex char_poly_even(int n, Complex lambda, const SectionParams& sec);

/// Loaded-system characteristic polynomial assembled by cofactor expansion
/// along the loaded row/column (load total g_total = G + g_load at odd j):
/// delta = (lambda + g_total/C) delta_j delta_{2n-j}
///       + (1/LC) delta_{j-1} delta_{2n-j} + (1/LC) delta_j delta_{2n-j-1}.
ScaledComplex char_poly_loaded(int n, int j, double g_total, Complex lambda,
                               const SectionParams& sec);

/// Root condition for the loaded cascade in the angle domain:
/// f1 = h sin((j+1)t/2) sin((2n-j+1)t/2)
///    - sin((j-1)t/2) sin((2n-j+1)t/2) - sin((j+1)t/2) sin((2n-j-1)t/2),
/// h = LC (lambda + g_total/C)(lambda + R/L) + 2.
/// Together with f2 = 0 this determines the loaded spectrum; t = 0 solves
/// f1 but is not a root of the characteristic polynomial.
Complex f1(Complex theta, double g_total, Complex lambda, int j, int n,
           const SectionParams& sec);

/// Angle/eigenvalue coupling: f2 = cos(t) - LC (lambda+R/L)(lambda+G/C)/2 - 1.
Complex f2(Complex theta, Complex lambda, const SectionParams& sec);

namespace detail {

/// sin(w) * exp(-s) and cos(w) * exp(-s), computed without overflow for any
/// s >= |Im w|. Used to evaluate f1 and its derivatives for angles continued
/// far into the complex plane (heavily loaded / overdamped modes), where the
/// raw sine products overflow.
Complex sin_damped(Complex w, double s);
Complex cos_damped(Complex w, double s);

/// f1 * exp(-(n+1)|Im theta|) plus a matching magnitude scale for the three
/// terms; residual tests use ratio |value|/scale.
struct ScaledF1 {
    Complex value;
    double term_scale;
};
ScaledF1 f1_scaled(Complex theta, double g_total, Complex lambda, int j, int n,
                   const SectionParams& sec);

/// Raw partial derivatives of f1/f2, valid at any (theta, lambda, g_total).
struct F1F2Partials {
    Complex dF1_dGL;
    Complex dF1_dlambda;
    Complex dF1_dtheta;
    Complex dF2_dtheta;
    Complex dF2_dlambda;
};
F1F2Partials partials_raw(Complex theta, double g_total, Complex lambda, int j,
                          int n, const SectionParams& sec);

/// dF1/dtheta and dF1/dlambda scaled by exp(-(n+1)|Im theta|), for Newton
/// steps in the overflow regime.
struct ScaledF1Derivs {
    Complex dtheta;
    Complex dlambda;
};
ScaledF1Derivs f1_derivs_scaled(Complex theta, double g_total, Complex lambda,
                                int j, int n, const SectionParams& sec);

}  // namespace detail

}  // namespace linedamp
