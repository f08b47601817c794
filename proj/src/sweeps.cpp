#include "linedamp/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace linedamp {

int PlacementSweepResult::argmax_z(int mode_k) const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows)
        if (r.z >= 1 && r.mode_k == mode_k) best = std::max(best, r.sigma);
    for (const auto& r : rows)
        if (r.z >= 1 && r.mode_k == mode_k && r.sigma >= best * (1.0 - 1e-9)) return r.z;
    throw InvalidParameterError("argmax_z: mode " + std::to_string(mode_k) + " not in sweep");
}

double PlacementSweepResult::baseline_sigma(int mode_k) const {
    for (const auto& r : rows)
        if (r.z == 0 && r.mode_k == mode_k) return r.sigma;
    throw InvalidParameterError("baseline_sigma: mode " + std::to_string(mode_k) +
                                " not in sweep");
}

PlacementSweepResult placement_sweep(const SectionParams& sec, double g_load,
                                     const std::vector<int>& modes) {
    sec.validate();
    if (!(g_load >= 0.0) || !std::isfinite(g_load))
        throw InvalidParameterError("placement_sweep: g_load must be finite and >= 0");
    if (modes.empty()) throw InvalidParameterError("placement_sweep: empty mode list");
    for (int k : modes)
        if (k < 1 || k > sec.n)
            throw InvalidParameterError("placement_sweep: mode " + std::to_string(k) +
                                        " outside 1..n");

    const Spectrum baseline = numeric_spectrum(build_state_space(sec));
    const auto baseline_modes = identify_resonances(baseline);
    // Spectrum index of each requested baseline mode, for matching.
    std::map<int, int> mode_index;
    for (int k : modes) {
        if (k > static_cast<int>(baseline_modes.size()))
            throw InvalidParameterError("placement_sweep: mode " + std::to_string(k) +
                                        " is not underdamped in the baseline");
        const Complex lam = baseline_modes[k - 1].lambda;
        for (int i = 0; i < baseline.size(); ++i)
            if (baseline.eigenvalues[i] == lam) mode_index[k] = i;
    }

    PlacementSweepResult result;
    result.g_load = g_load;
    result.modes = modes;
    for (int k : modes) {
        const auto& m = baseline_modes[k - 1];
        result.rows.push_back({0, k, m.sigma, m.lambda.real(), m.lambda.imag()});
    }
    for (int z = 1; z <= sec.n; ++z) {
        const Spectrum loaded = numeric_spectrum(build_state_space(sec, LoadSpec{z, g_load}));
        const auto pairs = match_modes(baseline, loaded);
        for (int k : modes) {
            const int bi = mode_index.at(k);
            const auto it = std::find_if(pairs.begin(), pairs.end(),
                                         [bi](const auto& p) { return p.first == bi; });
            const Complex lam = loaded.eigenvalues[it->second];
            result.rows.push_back({z, k, damping_factor(lam), lam.real(), lam.imag()});
        }
    }
    return result;
}

std::vector<double> default_locus_grid(double g_min, double g_max, int count) {
    std::vector<double> grid{0.0};
    const double l0 = std::log10(g_min), l1 = std::log10(g_max);
    for (int i = 0; i < count; ++i)
        grid.push_back(std::pow(10.0, l0 + (l1 - l0) * i / (count - 1)));
    return grid;
}

double RootLocusTrace::total_displacement() const {
    double d = 0.0;
    for (size_t i = 1; i < points.size(); ++i)
        d += std::abs(points[i].lambda - points[i - 1].lambda);
    return d;
}

RootLocusResult root_locus(const SectionParams& sec, int z,
                           const std::vector<double>& g_grid) {
    sec.validate();
    if (z < 1 || z > sec.n)
        throw PositionOutOfRangeError("root_locus: z outside 1..n");
    if (g_grid.empty()) throw InvalidParameterError("root_locus: empty load grid");
    for (size_t i = 1; i < g_grid.size(); ++i)
        if (!(g_grid[i] > g_grid[i - 1]))
            throw InvalidParameterError("root_locus: load grid must be strictly increasing");

    RootLocusResult result;
    result.z = z;
    result.g_grid = g_grid;
    result.matrix_scale = unloaded_matrix_scale(sec);

    Spectrum prev = numeric_spectrum(build_state_space(sec, LoadSpec{z, g_grid.front()}));
    const int dim = prev.size();
    int next_id = 0;
    std::vector<int> trace_of(dim);  // trace index per current eigenvalue slot
    for (int i = 0; i < dim; ++i) {
        trace_of[i] = next_id;
        RootLocusTrace t;
        t.trace_id = next_id++;
        t.points.push_back({g_grid.front(), prev.eigenvalues[i]});
        result.traces.push_back(std::move(t));
    }

    for (size_t gi = 1; gi < g_grid.size(); ++gi) {
        const Spectrum cur = numeric_spectrum(build_state_space(sec, LoadSpec{z, g_grid[gi]}));
        const auto pairs = match_modes(prev, cur);
        std::vector<int> new_trace_of(dim);
        for (auto [pi, ci] : pairs) {
            const double dist = std::abs(prev.eigenvalues[pi] - cur.eigenvalues[ci]);
            double gap = std::numeric_limits<double>::infinity();
            for (int o = 0; o < dim; ++o)
                if (o != pi) gap = std::min(gap, std::abs(prev.eigenvalues[pi] - prev.eigenvalues[o]));
            int tid = trace_of[pi];
            if (dist > 0.5 * gap && gap > 0.0) {
                // Identity lost: close the old trace, open a fresh one here.
                RootLocusTrace t;
                t.trace_id = next_id;
                result.breaks.push_back({static_cast<int>(gi), tid, next_id, dist, gap});
                tid = next_id++;
                result.traces.push_back(std::move(t));
            }
            result.traces[tid].points.push_back({g_grid[gi], cur.eigenvalues[ci]});
            new_trace_of[ci] = tid;
        }
        trace_of = new_trace_of;
        prev = cur;
    }
    return result;
}

Spectrum asymptotic_spectrum_large_load(const SectionParams& sec, int z) {
    sec.validate();
    if (z < 1 || z > sec.n)
        throw PositionOutOfRangeError("asymptotic_spectrum_large_load: z outside 1..n");
    const int j = 2 * z - 1;
    const double rl = sec.R / sec.L;

    auto block_eigs = [&](int half_sections) {
        std::vector<Complex> ev;
        if (half_sections == 0) {
            ev.emplace_back(-rl, 0.0);  // 1x1 block
            return ev;
        }
        SectionParams sub = sec;
        sub.n = half_sections;
        const Spectrum s = numeric_spectrum(build_state_space(sub));
        return s.eigenvalues;
    };

    std::vector<Complex> all = block_eigs((j - 1) / 2);
    const std::vector<Complex> right = block_eigs((2 * sec.n - j - 1) / 2);
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end(), [](const Complex& a, const Complex& b) {
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });

    Spectrum s;
    s.eigenvalues = std::move(all);
    s.method = SpectrumMethod::NumericOracle;
    s.source = "large-load limit at z=" + std::to_string(z) + ": sub-blocks dim " +
               std::to_string(j) + " and " + std::to_string(2 * sec.n - j) +
               " (plus the load-dependent real eigenvalue -(G+g_load)/C)";
    s.matrix_scale = unloaded_matrix_scale(sec);
    return s;
}

}  // namespace linedamp
