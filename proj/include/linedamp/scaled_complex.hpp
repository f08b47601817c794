#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace linedamp {

/// Complex value kept as significand * 2^exponent. The characteristic
/// polynomials of the cascade carry factors (1/LC)^n ~ (1.8e9)^n, far beyond
/// double range for n = 60, so every polynomial evaluation is returned in
/// this form and root tests work on the significand.
struct ScaledComplex {
    std::complex<double> significand{0.0, 0.0};
    long exponent = 0;  // base 2

    ScaledComplex() = default;
    ScaledComplex(std::complex<double> s, long e) : significand(s), exponent(e) { normalize(); }
    explicit ScaledComplex(std::complex<double> v) : significand(v), exponent(0) { normalize(); }
    explicit ScaledComplex(double v) : ScaledComplex(std::complex<double>(v, 0.0)) {}

    bool is_zero() const { return significand == std::complex<double>(0.0, 0.0); }

    /// Rescale so max(|re|,|im|) lies in [0.5, 1).
    void normalize() {
        const double m = std::max(std::abs(significand.real()), std::abs(significand.imag()));
        if (m == 0.0 || !std::isfinite(m)) {
            exponent = 0;
            return;
        }
        int e = 0;
        std::frexp(m, &e);
        significand = {std::ldexp(significand.real(), -e), std::ldexp(significand.imag(), -e)};
        exponent += e;
    }

    ScaledComplex operator*(const ScaledComplex& o) const {
        return {significand * o.significand, exponent + o.exponent};
    }
    ScaledComplex operator*(std::complex<double> v) const {
        return {significand * v, exponent};
    }

    ScaledComplex operator+(const ScaledComplex& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        // Align onto the larger exponent; a gap past double range means the
        // smaller addend vanishes.
        const ScaledComplex& big = exponent >= o.exponent ? *this : o;
        const ScaledComplex& small = exponent >= o.exponent ? o : *this;
        const long d = big.exponent - small.exponent;
        if (d > 1100) return big;
        const std::complex<double> shifted{std::ldexp(small.significand.real(), -static_cast<int>(d)),
                                           std::ldexp(small.significand.imag(), -static_cast<int>(d))};
        return {big.significand + shifted, big.exponent};
    }
    ScaledComplex operator-(const ScaledComplex& o) const {
        return *this + ScaledComplex{-o.significand, o.exponent};
    }

    /// log2 of the magnitude; -inf for zero.
    double log2_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return static_cast<double>(exponent) + std::log2(std::abs(significand));
    }

    /// Unscaled value. Throws if it falls outside double range.
    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        if (exponent > 1023 || exponent < -1070)
            throw std::overflow_error("scaled value outside representable double range");
        const int e = static_cast<int>(exponent);
        return {std::ldexp(significand.real(), e), std::ldexp(significand.imag(), e)};
    }
};

}  // namespace linedamp
