#include "linedamp/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace linedamp {

namespace {

bool canonical_less(const Complex& a, const Complex& b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
}

void sort_canonical(std::vector<Complex>& v) {
    std::sort(v.begin(), v.end(), canonical_less);
}

/// Rebuild the set as exact conjugate pairs: every value with im > 0 is
/// paired with the nearest im < 0 partner and both are replaced by
/// (lambda, conj lambda).
std::vector<Complex> enforce_conjugate_closure(std::vector<Complex> v) {
    std::vector<Complex> upper, lower, real;
    for (const Complex& x : v) {
        if (x.imag() > 0)
            upper.push_back(x);
        else if (x.imag() < 0)
            lower.push_back(x);
        else
            real.push_back(x);
    }
    std::vector<Complex> out = real;
    std::vector<bool> used(lower.size(), false);
    for (const Complex& u : upper) {
        int best = -1;
        double bestd = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < lower.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(std::conj(lower[i]) - u);
            if (d < bestd) {
                bestd = d;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) {
            // Unpaired residual imaginary part is solver noise; flatten it.
            out.push_back(Complex{u.real(), 0.0});
            continue;
        }
        used[best] = true;
        out.push_back(u);
        out.push_back(std::conj(u));
    }
    for (size_t i = 0; i < lower.size(); ++i)
        if (!used[i]) out.push_back(Complex{lower[i].real(), 0.0});
    sort_canonical(out);
    return out;
}

}  // namespace

std::string to_string(SpectrumMethod m) {
    switch (m) {
        case SpectrumMethod::ClosedForm: return "closed-form";
        case SpectrumMethod::AnalyticRoots: return "analytic-roots";
        case SpectrumMethod::NumericOracle: return "numeric-oracle";
    }
    return "?";
}

double unloaded_matrix_scale(const SectionParams& sec) {
    const double rl = sec.R / sec.L, gc = sec.G / sec.C;
    const double il = 1.0 / sec.L, ic = 1.0 / sec.C;
    const double n = sec.n;
    return std::sqrt((n + 1) * rl * rl + n * gc * gc + 2 * n * (il * il + ic * ic));
}

Spectrum unloaded_spectrum(const SectionParams& sec) {
    sec.validate();
    const double rl = sec.R / sec.L, gc = sec.G / sec.C;
    std::vector<Complex> ev;
    ev.reserve(2 * sec.n + 1);
    ev.emplace_back(-rl, 0.0);
    for (int k = 1; k <= sec.n; ++k) {
        const double theta = k * std::numbers::pi / (sec.n + 1);
        const double radicand =
            0.25 * (rl - gc) * (rl - gc) - 2.0 * (1.0 - std::cos(theta)) / sec.lc();
        const double mean = -0.5 * (rl + gc);
        if (radicand >= 0.0) {
            const double r = std::sqrt(radicand);
            ev.emplace_back(mean + r, 0.0);
            ev.emplace_back(mean - r, 0.0);
        } else {
            const double w = std::sqrt(-radicand);
            ev.emplace_back(mean, w);
            ev.emplace_back(mean, -w);
        }
    }
    sort_canonical(ev);
    Spectrum s;
    s.eigenvalues = std::move(ev);
    s.method = SpectrumMethod::ClosedForm;
    s.source = "unloaded cascade, n=" + std::to_string(sec.n);
    s.matrix_scale = unloaded_matrix_scale(sec);
    return s;
}

Spectrum numeric_spectrum(const StateSpaceModel& model) {
    const Eigen::MatrixXd& a = model.dense_a();
    if (!a.allFinite()) throw InvalidParameterError("numeric_spectrum: A has non-finite entries");
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << "numeric_spectrum: QR iteration failed to converge (dim=" << a.rows()
           << ", info=" << static_cast<int>(solver.info()) << ")";
        throw ConvergenceError(os.str());
    }
    std::vector<Complex> ev(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + a.rows());
    Spectrum s;
    s.eigenvalues = enforce_conjugate_closure(std::move(ev));
    s.method = SpectrumMethod::NumericOracle;
    s.source = "dense eigensolve, dim=" + std::to_string(a.rows());
    s.matrix_scale = model.frobenius_norm();
    return s;
}

double damping_factor(Complex lambda) {
    const double mag = std::abs(lambda);
    if (mag == 0.0) throw ZeroEigenvalueError("damping factor undefined for lambda = 0");
    return -lambda.real() / mag;
}

std::vector<ResonanceMode> identify_resonances(const Spectrum& spec) {
    const double tol = 1e-9 * spec.matrix_scale;
    std::vector<Complex> upper;
    for (const Complex& x : spec.eigenvalues)
        if (x.imag() > tol) upper.push_back(x);
    std::sort(upper.begin(), upper.end(),
              [](const Complex& a, const Complex& b) { return a.imag() < b.imag(); });
    std::vector<ResonanceMode> modes;
    modes.reserve(upper.size());
    int k = 1;
    for (const Complex& lam : upper) {
        ResonanceMode m;
        m.k = k++;
        m.lambda = lam;
        m.omega_n = std::abs(lam);
        m.f_damped_hz = lam.imag() / (2.0 * std::numbers::pi);
        m.sigma = damping_factor(lam);
        modes.push_back(m);
    }
    return modes;
}

std::vector<std::pair<int, int>> match_modes(const Spectrum& reference,
                                             const Spectrum& perturbed) {
    const auto& a = reference.eigenvalues;
    const auto& b = perturbed.eigenvalues;
    if (a.size() != b.size())
        throw CardinalityMismatchError("match_modes: spectra have " + std::to_string(a.size()) +
                                       " vs " + std::to_string(b.size()) + " eigenvalues");
    const int n = static_cast<int>(a.size());
    std::vector<bool> ua(n, false), ub(n, false);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(n);

    auto find_exact = [](const std::vector<Complex>& v, const std::vector<bool>& used,
                         Complex target) {
        for (size_t i = 0; i < v.size(); ++i)
            if (!used[i] && v[i] == target) return static_cast<int>(i);
        return -1;
    };

    int remaining = n;
    while (remaining > 0) {
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (int i = 0; i < n; ++i) {
            if (ua[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (ub[j]) continue;
                const double d = std::abs(a[i] - b[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        }
        ua[bi] = true;
        ub[bj] = true;
        pairs.emplace_back(bi, bj);
        --remaining;
        // Keep conjugate pairs consistent: mirror the match immediately.
        if (a[bi].imag() != 0.0 && b[bj].imag() != 0.0) {
            const int ci = find_exact(a, ua, std::conj(a[bi]));
            const int cj = find_exact(b, ub, std::conj(b[bj]));
            if (ci >= 0 && cj >= 0) {
                ua[ci] = true;
                ub[cj] = true;
                pairs.emplace_back(ci, cj);
                --remaining;
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

double matched_max_distance(const Spectrum& reference, const Spectrum& perturbed) {
    double worst = 0.0;
    for (auto [i, j] : match_modes(reference, perturbed))
        worst = std::max(worst, std::abs(reference.eigenvalues[i] - perturbed.eigenvalues[j]));
    return worst;
}

namespace {

struct NewtonResult {
    Complex theta;
    Complex lambda;
    bool converged = false;
};

double f2_scale(Complex theta, Complex lambda, const SectionParams& sec) {
    return std::max({1.0, std::abs(std::cos(theta)),
                     0.5 * sec.lc() * std::abs(g_poly(lambda, sec))});
}

double residual_norm(Complex theta, Complex lambda, double g_total, int j, int n,
                     const SectionParams& sec) {
    const auto r1 = detail::f1_scaled(theta, g_total, lambda, j, n, sec);
    const double s1 = r1.term_scale > 0 ? std::abs(r1.value) / r1.term_scale : 0.0;
    const double s2 = std::abs(f2(theta, lambda, sec)) / f2_scale(theta, lambda, sec);
    return s1 + s2;
}

NewtonResult refine_root(Complex theta, Complex lambda, double g_total, int j, int n,
                         const SectionParams& sec) {
    const int max_iter = 60;
    double res = residual_norm(theta, lambda, g_total, j, n, sec);
    for (int it = 0; it < max_iter && res > 1e-15; ++it) {
        const auto r1 = detail::f1_scaled(theta, g_total, lambda, j, n, sec);
        const Complex r2 = f2(theta, lambda, sec);
        const auto d1 = detail::f1_derivs_scaled(theta, g_total, lambda, j, n, sec);
        const auto praw = detail::partials_raw(theta, g_total, lambda, j, n, sec);
        // Rows: scaled f1 equation, raw f2 equation. Row scaling leaves the
        // Newton step unchanged.
        const Complex det = d1.dtheta * praw.dF2_dlambda - d1.dlambda * praw.dF2_dtheta;
        if (det == Complex{0.0, 0.0}) break;
        const Complex dtheta = -(r1.value * praw.dF2_dlambda - d1.dlambda * r2) / det;
        const Complex dlambda = -(d1.dtheta * r2 - r1.value * praw.dF2_dtheta) / det;

        double alpha = 1.0;
        bool stepped = false;
        for (int half = 0; half < 30; ++half) {
            const Complex t2 = theta + alpha * dtheta;
            const Complex l2 = lambda + alpha * dlambda;
            const double res2 = residual_norm(t2, l2, g_total, j, n, sec);
            if (res2 < res) {
                theta = t2;
                lambda = l2;
                res = res2;
                stepped = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!stepped) break;
    }
    return {theta, lambda, true};
}

bool certify_root(Complex theta, Complex lambda, double g_total, int j, int n,
                  const SectionParams& sec) {
    const auto r1 = detail::f1_scaled(theta, g_total, lambda, j, n, sec);
    if (std::abs(r1.value) > 1e-9 * r1.term_scale) return false;
    // |f2| <= 1e-10 in the regime where cos(theta) is O(1); for far
    // overdamped roots (|cos theta| >> 1) the bound is relative, since the
    // absolute target falls below representable resolution.
    return std::abs(f2(theta, lambda, sec)) <= 1e-10 * f2_scale(theta, lambda, sec);
}

}  // namespace

Spectrum loaded_spectrum_analytic(const SectionParams& sec, const LoadSpec& load) {
    sec.validate();
    load.validate(sec.n);
    const int n = sec.n;
    const int j = load.j();
    const double g_total = sec.G + load.g_load;
    const double rl = sec.R / sec.L;

    const StateSpaceModel model = build_state_space(sec, load);
    const Spectrum seeds = numeric_spectrum(model);
    const double scale = seeds.matrix_scale;

    // The persistent real root -R/L is taken exactly; drop its seed.
    int lam0_idx = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < seeds.size(); ++i) {
        const double d = std::abs(seeds.eigenvalues[i] - Complex{-rl, 0.0});
        if (d < best) {
            best = d;
            lam0_idx = i;
        }
    }

    std::vector<Complex> roots;
    roots.emplace_back(-rl, 0.0);
    std::vector<int> failed;
    for (int i = 0; i < seeds.size(); ++i) {
        if (i == lam0_idx) continue;
        const Complex seed = seeds.eigenvalues[i];
        if (seed.imag() < 0.0) continue;  // mirrored from the conjugate below
        Complex theta = std::acos(0.5 * sec.lc() * g_poly(seed, sec) + 1.0);
        auto r = refine_root(theta, seed, g_total, j, n, sec);
        // Real seeds stay real: flatten rounding residue and re-certify.
        if (seed.imag() == 0.0 && std::abs(r.lambda.imag()) <= 1e-9 * scale)
            r.lambda = Complex{r.lambda.real(), 0.0};
        const bool ok = certify_root(r.theta, r.lambda, g_total, j, n, sec) &&
                        std::abs(r.lambda - seed) <= 1e-6 * scale;
        if (!ok) {
            failed.push_back(i);
            continue;
        }
        roots.push_back(r.lambda);
        if (seed.imag() > 0.0) roots.push_back(std::conj(r.lambda));
    }
    if (!failed.empty()) {
        std::ostringstream os;
        os << "loaded_spectrum_analytic: " << failed.size()
           << " seed(s) failed Newton certification (z=" << load.z << ", g_load=" << load.g_load
           << "); numeric spectrum remains authoritative";
        throw SeedDivergenceError(os.str(), failed);
    }
    sort_canonical(roots);
    Spectrum s;
    s.eigenvalues = std::move(roots);
    s.method = SpectrumMethod::AnalyticRoots;
    s.source = "f1/f2 roots, n=" + std::to_string(n) + ", z=" + std::to_string(load.z) +
               ", g_load=" + std::to_string(load.g_load);
    s.matrix_scale = scale;
    return s;
}

}  // namespace linedamp
