#include "linedamp/timesim.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace linedamp {

void SourceWaveform::validate() const {
    if (!std::isfinite(amplitude))
        throw InvalidParameterError("source amplitude must be finite");
    if (!(ramp_duration >= 0.0) || !std::isfinite(ramp_duration))
        throw InvalidParameterError("ramp duration must be >= 0");
}

double SourceWaveform::value_at(double t) const {
    if (t < 0.0) return 0.0;
    if (kind == SourceKind::Step || ramp_duration == 0.0) return amplitude;
    return amplitude * std::min(t / ramp_duration, 1.0);
}

Trajectory simulate_energization(const StateSpaceModel& model, const SourceWaveform& src,
                                 double dt, double horizon, bool allow_unstable) {
    src.validate();
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw InvalidParameterError("simulate_energization: dt must be > 0");
    if (!(horizon >= dt) || !std::isfinite(horizon))
        throw InvalidParameterError("simulate_energization: horizon must be >= dt");

    const int dim = model.dim();
    Eigen::EigenSolver<Eigen::MatrixXd> es(model.dense_a(), false);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("simulate_energization: stability eigensolve failed");
    const double max_re = es.eigenvalues().real().maxCoeff();
    if (max_re >= 0.0 && !allow_unstable)
        throw InvalidParameterError(
            "simulate_energization: model is not strictly stable (max re(lambda) = " +
            std::to_string(max_re) + "); pass allow_unstable to override");

    // Augmented exponential gives Ad and the input integral in one shot.
    Eigen::MatrixXd aug = Eigen::MatrixXd::Zero(dim + 2, dim + 2);
    aug.topLeftCorner(dim, dim) = model.dense_a() * dt;
    aug.topRightCorner(dim, 2) = model.dense_b() * dt;
    const Eigen::MatrixXd e = aug.exp();
    const Eigen::MatrixXd ad = e.topLeftCorner(dim, dim);
    const Eigen::MatrixXd bd = e.topRightCorner(dim, 2);

    Trajectory traj;
    traj.dt = dt;
    traj.horizon = horizon;
    traj.labels = model.state_labels();
    // |mu| = exp(re(lambda) dt) for the exact discretization.
    traj.unstable_warning = max_re >= 0.0;

    const int steps = static_cast<int>(std::floor(horizon / dt));
    traj.series.assign(dim, std::vector<double>(steps + 1, 0.0));

    Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
    Eigen::Vector2d u;
    for (int k = 0; k < steps; ++k) {
        const double va = src.value_at(k * dt);
        u << va, (src.mirrored ? va : 0.0);
        x = (ad * x + bd * u).eval();
        for (int s = 0; s < dim; ++s) traj.series[s][k + 1] = x(s);
    }
    return traj;
}

namespace {

/// In-place iterative radix-2 FFT.
void fft_pow2(std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl{std::cos(ang), std::sin(ang)};
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

PeakAnalysis spectral_peaks(const Trajectory& traj, int state_index) {
    if (state_index < 0 || state_index >= static_cast<int>(traj.series.size()))
        throw InvalidParameterError("spectral_peaks: state index out of range");
    const auto& sig = traj.series[state_index];
    if (sig.size() < 1024)
        throw InsufficientSamplesError("spectral_peaks: need at least 1024 samples, have " +
                                       std::to_string(sig.size()));

    int nfft = 1;
    while (2 * nfft <= static_cast<int>(sig.size())) nfft *= 2;

    double mean = 0.0;
    for (int i = 0; i < nfft; ++i) mean += sig[i];
    mean /= nfft;

    std::vector<std::complex<double>> buf(nfft);
    for (int i = 0; i < nfft; ++i) {
        const double w =
            0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (nfft - 1));  // Hann taper
        buf[i] = {(sig[i] - mean) * w, 0.0};
    }
    fft_pow2(buf);

    const int half = nfft / 2;
    std::vector<double> mag(half + 1);
    for (int i = 0; i <= half; ++i) mag[i] = std::abs(buf[i]);
    const double gmax = *std::max_element(mag.begin(), mag.end());

    PeakAnalysis out;
    out.fft_size = nfft;
    out.bin_width_hz = 1.0 / (nfft * traj.dt);
    for (int i = 1; i < half; ++i) {
        if (mag[i] > mag[i - 1] && mag[i] >= mag[i + 1] && mag[i] > 0.01 * gmax) {
            // Quadratic interpolation over the three bins around the maximum.
            const double y0 = mag[i - 1], y1 = mag[i], y2 = mag[i + 1];
            const double denom = y0 - 2.0 * y1 + y2;
            const double delta = denom != 0.0 ? 0.5 * (y0 - y2) / denom : 0.0;
            out.peaks.push_back({(i + delta) * out.bin_width_hz, y1, y1 / gmax});
        }
    }
    std::sort(out.peaks.begin(), out.peaks.end(),
              [](const SpectralPeak& a, const SpectralPeak& b) { return a.magnitude > b.magnitude; });
    return out;
}

}  // namespace linedamp
