#pragma once

#include <complex>
#include <vector>

#include "linedamp/spectra.hpp"

namespace linedamp {

struct PlacementSweepRow {
    int z = 0;  // 0 marks the unloaded baseline row
    int mode_k = 0;
    double sigma = 0.0;
    double re = 0.0;
    double im = 0.0;
};

/// Damping of the requested modes as one load of fixed size is moved along
/// the line. Rows ordered baseline first, then z = 1..n; per z the requested
/// modes in order.
struct PlacementSweepResult {
    double g_load = 0.0;
    std::vector<int> modes;
    std::vector<PlacementSweepRow> rows;  // n*|modes| + |modes| rows

    /// Smallest z attaining the maximum sigma of mode k (ties within 1e-9
    /// relative collapse to the smaller z; the profile is symmetric about the
    /// center, so the canonical representative is the left one).
    int argmax_z(int mode_k) const;
    double baseline_sigma(int mode_k) const;
};

PlacementSweepResult placement_sweep(const SectionParams& sec, double g_load,
                                     const std::vector<int>& modes);

struct RootLocusPoint {
    double g_load = 0.0;
    Complex lambda;
};

struct RootLocusTrace {
    int trace_id = 0;
    std::vector<RootLocusPoint> points;

    double total_displacement() const;
};

struct TraceBreak {
    int grid_index = 0;   // step at which matching jumped
    int old_trace_id = 0;
    int new_trace_id = 0;
    double distance = 0.0;
    double local_gap = 0.0;
};

/// Eigenvalue trajectories over a load grid at a fixed position. Mode
/// identity is defined by chained nearest-neighbor matching from the
/// previous grid point, never by re-sorting. A match farther than half the
/// local inter-mode spacing splits the trace and is reported.
struct RootLocusResult {
    int z = 0;
    std::vector<double> g_grid;
    std::vector<RootLocusTrace> traces;
    std::vector<TraceBreak> breaks;
    double matrix_scale = 0.0;  // unloaded ||A||_F reference
};

RootLocusResult root_locus(const SectionParams& sec, int z,
                           const std::vector<double>& g_grid);

/// Default locus grid: exact 0 plus count log-spaced points in
/// [g_min, g_max]; spans the series-expansion and large-load regimes.
std::vector<double> default_locus_grid(double g_min = 1e-4, double g_max = 1e4,
                                       int count = 60);

/// Large-load limit spectrum at position z: the union of the two decoupled
/// sub-block spectra of dimensions j and 2n-j (each an unloaded cascade
/// block), computed by the numeric oracle. The diverging real eigenvalue
/// -(G+g_load)/C is load-dependent and reported symbolically in `source`,
/// not as a numeric entry; the list therefore has 2n entries.
Spectrum asymptotic_spectrum_large_load(const SectionParams& sec, int z);

}  // namespace linedamp
