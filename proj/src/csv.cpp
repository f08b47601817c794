#include "linedamp/csv.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace linedamp {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string spectrum_csv(const Spectrum& spec) {
    // Mode numbers keyed by the upper-half member; the conjugate inherits k.
    std::map<Complex, int, bool (*)(const Complex&, const Complex&)> mode_of(
        [](const Complex& a, const Complex& b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
    for (const auto& m : identify_resonances(spec)) mode_of[m.lambda] = m.k;

    std::ostringstream os;
    os << "re,im,omega_n,f_damped_hz,sigma,mode_k\n";
    for (const Complex& lam : spec.eigenvalues) {
        os << format_full(lam.real()) << ',' << format_full(lam.imag()) << ','
           << format_full(std::abs(lam)) << ','
           << format_full(lam.imag() / (2.0 * std::numbers::pi)) << ','
           << format_full(damping_factor(lam)) << ',';
        auto it = mode_of.find(lam.imag() >= 0.0 ? lam : std::conj(lam));
        if (it != mode_of.end()) os << it->second;
        os << '\n';
    }
    return os.str();
}

std::string sensitivity_csv(const SensitivityProfile& prof) {
    std::ostringstream os;
    os << "j,z,dlambda_re,dlambda_im,mode_k\n";
    for (const auto& pt : prof.points)
        os << pt.j << ',' << pt.z << ',' << format_full(pt.dlambda_dGL.real()) << ','
           << format_full(pt.dlambda_dGL.imag()) << ',' << prof.k << '\n';
    return os.str();
}

std::string placement_sweep_csv(const PlacementSweepResult& sweep) {
    std::ostringstream os;
    os << "z,mode_k,sigma,re,im\n";
    for (const auto& r : sweep.rows)
        os << r.z << ',' << r.mode_k << ',' << format_full(r.sigma) << ','
           << format_full(r.re) << ',' << format_full(r.im) << '\n';
    return os.str();
}

std::string root_locus_csv(const RootLocusResult& locus) {
    std::ostringstream os;
    os << "trace_id,g_load,re,im\n";
    for (const auto& t : locus.traces)
        for (const auto& p : t.points)
            os << t.trace_id << ',' << format_full(p.g_load) << ','
               << format_full(p.lambda.real()) << ',' << format_full(p.lambda.imag()) << '\n';
    return os.str();
}

std::string trajectory_csv(const Trajectory& traj, int stride) {
    if (stride < 1) throw InvalidParameterError("trajectory_csv: stride must be >= 1");
    std::ostringstream os;
    os << 't';
    for (const auto& l : traj.labels) os << ',' << l;
    os << '\n';
    const int samples = traj.samples();
    for (int i = 0; i < samples; i += stride) {
        os << format_full(i * traj.dt);
        for (const auto& s : traj.series) os << ',' << format_full(s[i]);
        os << '\n';
    }
    return os.str();
}

std::string peaks_csv(const PeakAnalysis& peaks) {
    std::ostringstream os;
    os << "f_hz,rel_mag\n";
    for (const auto& p : peaks.peaks)
        os << format_full(p.f_hz) << ',' << format_full(p.rel_mag) << '\n';
    return os.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed for " + path);
}

}  // namespace linedamp
