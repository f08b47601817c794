#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "linedamp/errors.hpp"

namespace linedamp {

/// Per-km electrical constants of the line plus the lumping resolution.
struct LineParams {
    double r_per_km = 0.0;  // ohm/km
    double l_per_km = 0.0;  // H/km
    double c_per_km = 0.0;  // F/km
    double g_per_km = 0.0;  // S/km
    double length_km = 0.0;
    int n_sections = 0;

    void validate() const;
};

/// Lumped constants of one pi-section (per-km value * length / n).
struct SectionParams {
    double R = 0.0;  // ohm
    double L = 0.0;  // H
    double C = 0.0;  // F
    double G = 0.0;  // S
    int n = 0;

    void validate() const;
    double lc() const { return L * C; }
};

/// Shunt load: conductance g_load added at node z. The loaded diagonal
/// entry of A sits at state index 2z (1-based), i.e. j = 2z-1 in the
/// characteristic-polynomial bookkeeping.
struct LoadSpec {
    int z = 0;
    double g_load = 0.0;  // S, >= 0

    int j() const { return 2 * z - 1; }
    void validate(int n_sections) const;
};

/// State-space model of the cascade: x = (i_1, v_1, i_2, ..., v_n, i_{n+1}),
/// dx/dt = A x + B u with u = (v_a, v_b). A is tridiagonal and, unloaded,
/// 2-Toeplitz of odd order 2n+1. Dense storage; access the matrix through
/// dense_a()/entry() so a banded backend stays possible.
class StateSpaceModel {
public:
    StateSpaceModel(const SectionParams& sec, std::optional<LoadSpec> load);

    int dim() const { return 2 * n_ + 1; }
    int sections() const { return n_; }
    const SectionParams& section() const { return sec_; }
    const std::optional<LoadSpec>& load() const { return load_; }

    const Eigen::MatrixXd& dense_a() const { return a_; }
    const Eigen::MatrixXd& dense_b() const { return b_; }
    /// 1-based entry accessor matching the row/column numbering used in the
    /// model equations.
    double entry(int row, int col) const { return a_(row - 1, col - 1); }

    double frobenius_norm() const { return a_.norm(); }
    std::vector<std::string> state_labels() const;

private:
    int n_;
    SectionParams sec_;
    std::optional<LoadSpec> load_;
    Eigen::MatrixXd a_;
    Eigen::MatrixXd b_;
};

/// Collapse per-km line constants into per-section lumped values.
SectionParams section_params(const LineParams& params);

/// Build A and B of the cascade, optionally with a shunt load at load->z.
/// g_load = 0 with a position given reproduces the unloaded model bit-exactly.
StateSpaceModel build_state_space(const SectionParams& sec,
                                  std::optional<LoadSpec> load = std::nullopt);

}  // namespace linedamp
