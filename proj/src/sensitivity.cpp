#include "linedamp/sensitivity.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace linedamp {

OperatingPoint make_operating_point(const SectionParams& sec, int k) {
    sec.validate();
    if (k < 1 || k > sec.n)
        throw InvalidParameterError("mode index k must be in 1..n");
    const double rl = sec.R / sec.L, gc = sec.G / sec.C;
    const double theta = k * std::numbers::pi / (sec.n + 1);
    const double radicand = 0.25 * (rl - gc) * (rl - gc) - 2.0 * (1.0 - std::cos(theta)) / sec.lc();
    const double mean = -0.5 * (rl + gc);
    Complex lambda;
    if (radicand >= 0.0)
        lambda = Complex{mean + std::sqrt(radicand), 0.0};
    else
        lambda = Complex{mean, std::sqrt(-radicand)};
    return {lambda, theta, k, sec.G};
}

PartialDerivatives partial_derivatives(const OperatingPoint& op, int j,
                                       const SectionParams& sec) {
    sec.validate();
    if (j < 1 || j > 2 * sec.n - 1 || j % 2 == 0)
        throw InvalidParameterError("partial_derivatives: j must be odd in 1..2n-1");
    const auto p = detail::partials_raw(Complex{op.theta_star, 0.0}, op.g_total,
                                        op.lambda_star, j, sec.n, sec);
    return {p.dF1_dGL, p.dF1_dlambda, p.dF1_dtheta, p.dF2_dtheta, p.dF2_dlambda};
}

Complex eigenvalue_sensitivity(const OperatingPoint& op, int j, const SectionParams& sec,
                               bool approximate) {
    sec.validate();
    if (j < 1 || j > 2 * sec.n)
        throw InvalidParameterError("eigenvalue_sensitivity: j must be in 1..2n");
    if (approximate) {
        if (op.k != 1)
            throw UnsupportedModeError(
                "the 1/2C approximation is derived for the first resonance only");
        const double th = op.theta_star;
        const double m = static_cast<double>(sec.n - j);
        const double num = std::cos(m * th) + 1.0;
        const double den = (-m * std::cos(th) * std::sin(m * th) -
                            sec.n * std::sin(sec.n * th)) / std::sin(th) -
                           std::cos(m * th) - 1.0;
        return Complex{num / den / (2.0 * sec.C), 0.0};
    }
    const auto p = detail::partials_raw(Complex{op.theta_star, 0.0}, op.g_total,
                                        op.lambda_star, j, sec.n, sec);
    const Complex den = p.dF1_dtheta * (p.dF2_dlambda / p.dF2_dtheta) - p.dF1_dlambda;
    return p.dF1_dGL / den;
}

SensitivityProfile sensitivity_profile(const SectionParams& sec, int k) {
    const OperatingPoint op = make_operating_point(sec, k);
    SensitivityProfile prof;
    prof.n = sec.n;
    prof.k = k;
    prof.sec = sec;
    for (int j = 1; j <= 2 * sec.n - 1; j += 2)
        prof.points.push_back({j, (j + 1) / 2, eigenvalue_sensitivity(op, j, sec)});
    return prof;
}

int optimal_location(const SectionParams& sec, int k) {
    const SensitivityProfile prof = sensitivity_profile(sec, k);
    int z_star = 1;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& pt : prof.points) {
        if (pt.z > sec.n) break;
        const double gain = -pt.dlambda_dGL.real();
        if (gain > best) {
            best = gain;
            z_star = pt.z;
        }
    }
    return z_star;
}

Complex fd_sensitivity(const SectionParams& sec, int k, int j, double delta_g) {
    sec.validate();
    if (j % 2 == 0 || j < 1 || j > 2 * sec.n - 1)
        throw InvalidParameterError("fd_sensitivity: j must be odd in 1..2n-1");
    if (!(delta_g > 0.0))
        throw InvalidParameterError("fd_sensitivity: delta_g must be > 0");
    const int z = (j + 1) / 2;
    const OperatingPoint op = make_operating_point(sec, k);

    // Central difference around G_L = G: the negative leg is an entry tweak
    // on the dense matrix (a LoadSpec cannot carry negative conductance).
    const StateSpaceModel base = build_state_space(sec);
    auto eigs_at = [&](double dg) {
        Eigen::MatrixXd a = base.dense_a();
        a(2 * z - 1, 2 * z - 1) -= dg / sec.C;
        Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
        if (solver.info() != Eigen::Success)
            throw ConvergenceError("fd_sensitivity: eigensolve failed");
        return solver.eigenvalues();
    };
    auto track = [&](const Eigen::VectorXcd& ev) {
        int best = 0;
        double d = std::numeric_limits<double>::infinity();
        for (int i = 0; i < ev.size(); ++i) {
            const double di = std::abs(ev(i) - op.lambda_star);
            if (di < d) {
                d = di;
                best = i;
            }
        }
        return ev(best);
    };
    const Complex lp = track(eigs_at(+delta_g));
    const Complex lm = track(eigs_at(-delta_g));
    return (lp - lm) / (2.0 * delta_g);
}

}  // namespace linedamp
