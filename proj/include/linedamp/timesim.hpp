#pragma once

#include <string>
#include <vector>

#include "linedamp/line_model.hpp"

namespace linedamp {

enum class SourceKind { Step, Ramp };

/// Energization command applied to the sending-end source v_a; v_b is held
/// at 0 (single-ended) or mirrors v_a.
struct SourceWaveform {
    SourceKind kind = SourceKind::Step;
    double amplitude = 1.0;       // V
    double ramp_duration = 0.0;   // s; 0 = step
    bool mirrored = false;

    double value_at(double t) const;
    void validate() const;
};

/// Sampled state trajectory: sample i is t = i*dt, i = 0..floor(T/dt).
struct Trajectory {
    double dt = 0.0;
    double horizon = 0.0;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> series;  // one vector per state
    bool unstable_warning = false;            // a discrete eigenvalue had |mu| >= 1

    int samples() const { return series.empty() ? 0 : static_cast<int>(series.front().size()); }
};

/// Integrate dx/dt = A x + B u from x(0) = 0 by exact zero-order-hold
/// discretization: one matrix exponential of the augmented [A B; 0 0] * dt,
/// then x_{k+1} = Ad x_k + Bd u(t_k). Exact up to the piecewise-constant
/// sampling of the input; the cascade is stiff enough (|im| up to ~1e5 rad/s
/// against re ~ -20) that explicit integration is not an option.
/// allow_unstable skips the stability precondition; the discrete-eigenvalue
/// warning is reported on the trajectory either way.
Trajectory simulate_energization(const StateSpaceModel& model, const SourceWaveform& src,
                                 double dt, double horizon, bool allow_unstable = false);

struct SpectralPeak {
    double f_hz = 0.0;
    double magnitude = 0.0;  // windowed DFT magnitude, comparable across equal windows
    double rel_mag = 0.0;    // magnitude / global maximum
};

/// Peak list plus the transform geometry needed to interpret "within one
/// bin" statements.
struct PeakAnalysis {
    std::vector<SpectralPeak> peaks;  // sorted by magnitude, descending
    double bin_width_hz = 0.0;
    int fft_size = 0;
};

/// Magnitude spectrum peaks of one state: mean removed, Hann window, radix-2
/// FFT over the largest power-of-two prefix, local maxima above 1% of the
/// global maximum, peak frequency refined by quadratic interpolation over
/// three bins. Needs at least 1024 samples.
PeakAnalysis spectral_peaks(const Trajectory& traj, int state_index);

}  // namespace linedamp
