#pragma once

#include <string>

#include "linedamp/sensitivity.hpp"
#include "linedamp/spectra.hpp"
#include "linedamp/sweeps.hpp"
#include "linedamp/timesim.hpp"

namespace linedamp {

/// All exports carry full double precision (17 significant digits, "C"
/// locale) so files round-trip bit-exactly.
std::string format_full(double v);

/// columns: re,im,omega_n,f_damped_hz,sigma,mode_k (mode_k empty for real
/// eigenvalues; both members of a conjugate pair carry the same k).
std::string spectrum_csv(const Spectrum& spec);

/// columns: j,z,dlambda_re,dlambda_im,mode_k
std::string sensitivity_csv(const SensitivityProfile& prof);

/// columns: z,mode_k,sigma,re,im (z = 0 rows are the unloaded baseline).
std::string placement_sweep_csv(const PlacementSweepResult& sweep);

/// columns: trace_id,g_load,re,im
std::string root_locus_csv(const RootLocusResult& locus);

/// columns: t,<state labels...>; stride downsamples by keeping every
/// stride-th sample (stride >= 1).
std::string trajectory_csv(const Trajectory& traj, int stride = 1);

/// columns: f_hz,rel_mag
std::string peaks_csv(const PeakAnalysis& peaks);

/// Write via temp file + rename so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace linedamp
