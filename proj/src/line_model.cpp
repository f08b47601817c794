#include "linedamp/line_model.hpp"

#include <cmath>

namespace linedamp {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }
bool finite_pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void LineParams::validate() const {
    if (!finite_pos(l_per_km) || !finite_pos(c_per_km))
        throw InvalidParameterError("l_per_km and c_per_km must be > 0");
    if (!finite_nonneg(r_per_km) || !finite_nonneg(g_per_km))
        throw InvalidParameterError("r_per_km and g_per_km must be >= 0");
    if (!finite_pos(length_km))
        throw InvalidParameterError("length_km must be > 0");
    if (n_sections < 1)
        throw InvalidParameterError("n_sections must be >= 1");
}

void SectionParams::validate() const {
    if (!finite_pos(L) || !finite_pos(C))
        throw InvalidParameterError("section L and C must be > 0");
    if (!finite_nonneg(R) || !finite_nonneg(G))
        throw InvalidParameterError("section R and G must be >= 0");
    if (n < 1)
        throw InvalidParameterError("section count must be >= 1");
}

void LoadSpec::validate(int n_sections) const {
    if (z < 1 || z > n_sections)
        throw PositionOutOfRangeError("load position z=" + std::to_string(z) +
                                      " outside 1.." + std::to_string(n_sections));
    if (!std::isfinite(g_load) || g_load < 0.0)
        throw InvalidParameterError("g_load must be finite and >= 0");
}

SectionParams section_params(const LineParams& params) {
    params.validate();
    const double scale = params.length_km / params.n_sections;
    SectionParams sec{params.r_per_km * scale, params.l_per_km * scale,
                      params.c_per_km * scale, params.g_per_km * scale,
                      params.n_sections};
    sec.validate();
    return sec;
}

StateSpaceModel::StateSpaceModel(const SectionParams& sec, std::optional<LoadSpec> load)
    : n_(sec.n), sec_(sec), load_(load) {
    sec.validate();
    if (load_) load_->validate(n_);

    const int dim = 2 * n_ + 1;
    const double rl = sec.R / sec.L;
    const double gc = sec.G / sec.C;
    a_ = Eigen::MatrixXd::Zero(dim, dim);
    for (int p = 1; p <= dim; ++p) {
        if (p % 2 == 1) {  // current state i_{(p+1)/2}
            a_(p - 1, p - 1) = -rl;
            if (p + 1 <= dim) a_(p - 1, p) = -1.0 / sec.L;
            if (p - 1 >= 1) a_(p - 1, p - 2) = 1.0 / sec.L;
        } else {  // voltage state v_{p/2}
            a_(p - 1, p - 1) = -gc;
            a_(p - 1, p) = -1.0 / sec.C;
            a_(p - 1, p - 2) = 1.0 / sec.C;
        }
    }
    if (load_) {
        const int p = 2 * load_->z;
        a_(p - 1, p - 1) = -(sec.G + load_->g_load) / sec.C;
    }

    b_ = Eigen::MatrixXd::Zero(dim, 2);
    b_(0, 0) = 1.0 / sec.L;
    b_(dim - 1, 1) = -1.0 / sec.L;
}

std::vector<std::string> StateSpaceModel::state_labels() const {
    std::vector<std::string> labels;
    labels.reserve(dim());
    for (int k = 1; k <= n_; ++k) {
        labels.push_back("i_" + std::to_string(k));
        labels.push_back("v_" + std::to_string(k));
    }
    labels.push_back("i_" + std::to_string(n_ + 1));
    return labels;
}

StateSpaceModel build_state_space(const SectionParams& sec, std::optional<LoadSpec> load) {
    return StateSpaceModel(sec, load);
}

}  // namespace linedamp
