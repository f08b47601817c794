#include "linedamp/polynomials.hpp"

#include <cmath>

namespace linedamp {

Complex chebyshev_u(int n, Complex x) {
    if (n < 0) throw InvalidParameterError("chebyshev_u: n must be >= 0");
    if (n == 0) return {1.0, 0.0};
    Complex prev{1.0, 0.0};
    Complex cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

ScaledComplex chebyshev_u_scaled(int n, Complex x) {
    if (n < 0) throw InvalidParameterError("chebyshev_u_scaled: n must be >= 0");
    if (n == 0) return ScaledComplex{1.0};
    // Shared-exponent recurrence; renormalize whenever the pair grows past
    // 2^500 so the next step cannot overflow.
    Complex prev{1.0, 0.0};
    Complex cur = 2.0 * x;
    long exp2 = 0;
    const double big = std::ldexp(1.0, 500);
    for (int k = 1; k < n; ++k) {
        Complex next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
        double m = std::max({std::abs(cur.real()), std::abs(cur.imag()),
                             std::abs(prev.real()), std::abs(prev.imag())});
        if (m > big) {
            cur = {std::ldexp(cur.real(), -500), std::ldexp(cur.imag(), -500)};
            prev = {std::ldexp(prev.real(), -500), std::ldexp(prev.imag(), -500)};
            exp2 += 500;
        }
    }
    return {cur, exp2};
}

Complex g_poly(Complex lambda, const SectionParams& sec) {
    sec.validate();
    return (lambda + sec.R / sec.L) * (lambda + sec.G / sec.C);
}

namespace {

/// (1/LC)^n as a scaled value.
ScaledComplex inv_lc_pow(int n, const SectionParams& sec) {
    ScaledComplex r{1.0};
    ScaledComplex base{1.0 / sec.lc()};
    int e = n;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace

ScaledComplex p_n(int n, Complex lambda, const SectionParams& sec) {
    if (n == -1) return ScaledComplex{};
    if (n < -1) throw InvalidParameterError("p_n: n must be >= -1");
    sec.validate();
    const Complex arg = 0.5 * sec.lc() * lambda + 1.0;
    return chebyshev_u_scaled(n, arg) * inv_lc_pow(n, sec);
}

ScaledComplex char_poly_odd(int n, Complex lambda, const SectionParams& sec) {
    if (n < 1) throw InvalidParameterError("char_poly_odd: n must be >= 1");
    const Complex g = g_poly(lambda, sec);
    return p_n(n, g, sec) * (lambda + sec.R / sec.L);
}

ScaledComplex char_poly_even(int n, Complex lambda, const SectionParams& sec) {
    if (n < 0) throw InvalidParameterError("char_poly_even: n must be >= 0");
    const Complex g = g_poly(lambda, sec);
    return p_n(n, g, sec) - p_n(n - 1, g, sec) * Complex{1.0 / sec.lc(), 0.0};
}

ScaledComplex char_poly_loaded(int n, int j, double g_total, Complex lambda,
                               const SectionParams& sec) {
    if (j < 1 || j > 2 * n - 1 || j % 2 == 0)
        throw InvalidParameterError("char_poly_loaded: j must be odd in 1..2n-1");
    if (g_total < sec.G)
        throw InvalidParameterError("char_poly_loaded: g_total must be >= G");
    const int a = (j - 1) / 2;        // delta_j = char_poly_odd(a)
    const int b = (2 * n - j - 1) / 2;  // delta_{2n-j} = char_poly_odd(b)
    const Complex g = g_poly(lambda, sec);
    const Complex rl = lambda + sec.R / sec.L;
    const double inv_lc = 1.0 / sec.lc();

    const ScaledComplex d_j = p_n(a, g, sec) * rl;
    const ScaledComplex d_rest = p_n(b, g, sec) * rl;
    const ScaledComplex d_j_even = char_poly_even(a, lambda, sec);          // delta_{j-1}
    const ScaledComplex d_rest_even = char_poly_even(b, lambda, sec);       // delta_{2n-j-1}

    return d_j * d_rest * (lambda + g_total / sec.C) +
           d_j_even * d_rest * Complex{inv_lc, 0.0} +
           d_j * d_rest_even * Complex{inv_lc, 0.0};
}

Complex f1(Complex theta, double g_total, Complex lambda, int j, int n,
           const SectionParams& sec) {
    const Complex h = sec.lc() * (lambda + g_total / sec.C) * (lambda + sec.R / sec.L) + 2.0;
    const double A = (j + 1) / 2.0;
    const double B = (2 * n - j + 1) / 2.0;
    return h * std::sin(A * theta) * std::sin(B * theta) -
           std::sin((A - 1.0) * theta) * std::sin(B * theta) -
           std::sin(A * theta) * std::sin((B - 1.0) * theta);
}

Complex f2(Complex theta, Complex lambda, const SectionParams& sec) {
    return std::cos(theta) - 0.5 * sec.lc() * (lambda + sec.R / sec.L) * (lambda + sec.G / sec.C) - 1.0;
}

namespace detail {

Complex sin_damped(Complex w, double s) {
    // sin(a+ib) e^{-s} = sin a cosh b e^{-s} + i cos a sinh b e^{-s};
    // with s >= |b| both exp(b-s) and exp(-b-s) are <= 1.
    const double a = w.real(), b = w.imag();
    const double ep = std::exp(b - s), em = std::exp(-b - s);
    return {std::sin(a) * 0.5 * (ep + em), std::cos(a) * 0.5 * (ep - em)};
}

Complex cos_damped(Complex w, double s) {
    const double a = w.real(), b = w.imag();
    const double ep = std::exp(b - s), em = std::exp(-b - s);
    return {std::cos(a) * 0.5 * (ep + em), -std::sin(a) * 0.5 * (ep - em)};
}

ScaledF1 f1_scaled(Complex theta, double g_total, Complex lambda, int j, int n,
                   const SectionParams& sec) {
    const Complex h = sec.lc() * (lambda + g_total / sec.C) * (lambda + sec.R / sec.L) + 2.0;
    const double A = (j + 1) / 2.0;
    const double B = (2 * n - j + 1) / 2.0;
    const double b = std::abs(theta.imag());
    // Each product term is scaled by exp(-(A+B)|Im theta|) = exp(-(n+1)b).
    const Complex sA = sin_damped(A * theta, A * b);
    const Complex sAm = sin_damped((A - 1.0) * theta, (A - 1.0) * b);
    const Complex sB = sin_damped(B * theta, B * b);
    const Complex sBm = sin_damped((B - 1.0) * theta, (B - 1.0) * b);
    const double drop = std::exp(-b);  // extra e^{-b} on the two lower-degree terms
    const Complex value = h * sA * sB - drop * (sAm * sB + sA * sBm);
    // Factored magnitude scale: stays positive even where the term values
    // vanish simultaneously (center-load even modes).
    const double scale =
        (std::abs(h) + 2.0) * (std::abs(sA) + std::abs(sAm)) * (std::abs(sB) + std::abs(sBm));
    return {value, scale};
}

F1F2Partials partials_raw(Complex theta, double g_total, Complex lambda, int j,
                          int n, const SectionParams& sec) {
    const double lc = sec.lc();
    const double rl = sec.R / sec.L;
    const double gc = sec.G / sec.C;
    const double m = static_cast<double>(n - j);
    const Complex h = lc * (lambda + g_total / sec.C) * (lambda + rl) + 2.0;
    const Complex bracket = 0.5 * (std::cos(m * theta) - std::cos((n + 1.0) * theta));

    F1F2Partials p;
    p.dF1_dGL = sec.L * (lambda + rl) * bracket;
    p.dF1_dlambda = lc * (2.0 * lambda + g_total / sec.C + rl) * bracket;
    p.dF1_dtheta = h * 0.5 * (-m * std::sin(m * theta) + (n + 1.0) * std::sin((n + 1.0) * theta)) +
                   0.5 * ((m + 1.0) * std::sin((m + 1.0) * theta) +
                          (m - 1.0) * std::sin((m - 1.0) * theta)) -
                   static_cast<double>(n) * std::sin(static_cast<double>(n) * theta);
    p.dF2_dtheta = -std::sin(theta);
    p.dF2_dlambda = -lc * (lambda + 0.5 * (gc + rl));
    return p;
}

ScaledF1Derivs f1_derivs_scaled(Complex theta, double g_total, Complex lambda,
                                int j, int n, const SectionParams& sec) {
    const double lc = sec.lc();
    const double rl = sec.R / sec.L;
    const double m = static_cast<double>(n - j);
    const double b = std::abs(theta.imag());
    const double S = (n + 1.0) * b;
    const Complex h = lc * (lambda + g_total / sec.C) * (lambda + rl) + 2.0;

    const Complex sm = sin_damped(m * theta, S);
    const Complex sn1 = sin_damped((n + 1.0) * theta, S);
    const Complex smp = sin_damped((m + 1.0) * theta, S);
    const Complex smm = sin_damped((m - 1.0) * theta, S);
    const Complex sn = sin_damped(static_cast<double>(n) * theta, S);
    const Complex cm = cos_damped(m * theta, S);
    const Complex cn1 = cos_damped((n + 1.0) * theta, S);

    ScaledF1Derivs d;
    d.dtheta = h * 0.5 * (-m * sm + (n + 1.0) * sn1) +
               0.5 * ((m + 1.0) * smp + (m - 1.0) * smm) - static_cast<double>(n) * sn;
    d.dlambda = lc * (2.0 * lambda + g_total / sec.C + rl) * 0.5 * (cm - cn1);
    return d;
}

}  // namespace detail

}  // namespace linedamp
