#include "dzk/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "dzk/fft.hpp"

namespace dzk {

namespace {

double spectral_weighted_norm(const SpectralField& f, double (*w)(double, int, double),
                              double s) {
    const Grid& g = f.grid();
    double acc = 0.0;
    for (int mi = 0; mi < g.nx; ++mi) {
        const double xi = g.xi(mi);
        for (int ni = 0; ni < g.ny; ++ni) {
            const double c2 = std::norm(f.at(mi, ni));
            if (c2 != 0.0) acc += w(xi, g.freq_y(ni), s) * c2;
        }
    }
    return std::sqrt(acc * g.cell_area() / (static_cast<double>(g.nx) * g.ny));
}

} // namespace

double l2_norm(const Field& f) {
    const Grid& g = f.grid();
    double acc = 0.0;
    for (double v : f.values()) acc += v * v;
    return std::sqrt(acc * g.cell_area());
}

double l2_norm(const SpectralField& f) {
    return spectral_weighted_norm(
        f, [](double, int, double) { return 1.0; }, 0.0);
}

double sobolev_norm(const SpectralField& f, double s) {
    if (s == 0.0) return l2_norm(f);
    return spectral_weighted_norm(
        f,
        [](double xi, int n, double s_) {
            return std::pow(1.0 + xi * xi + static_cast<double>(n) * n, s_);
        },
        0.5 * s);
}

double anisotropic_norm_x(const SpectralField& f, double s) {
    if (s == 0.0) return l2_norm(f);
    return spectral_weighted_norm(
        f, [](double xi, int, double s_) { return std::pow(1.0 + xi * xi, s_); }, 0.5 * s);
}

double anisotropic_norm_y(const SpectralField& f, double s) {
    if (s == 0.0) return l2_norm(f);
    return spectral_weighted_norm(
        f,
        [](double, int n, double s_) {
            return std::pow(1.0 + static_cast<double>(n) * n, s_);
        },
        0.5 * s);
}

double sup_norm(const SpectralField& f, int oversample) {
    if (oversample != 1 && oversample != 2 && oversample != 4)
        throw std::invalid_argument("sup_norm: oversample must be 1, 2 or 4");
    if (oversample == 1) return fft::inverse(f).max_abs();
    return fft::inverse(fft::zero_pad(f, oversample)).max_abs();
}

double sup_norm(const Field& f, int oversample) {
    if (oversample == 1) return f.max_abs();
    return sup_norm(fft::forward(f), oversample);
}

double mixed_norm(const std::vector<std::pair<double, double>>& samples, TimeLp p) {
    if (p == TimeLp::Linf) {
        if (samples.empty()) throw std::invalid_argument("mixed_norm: no samples");
        double m = 0.0;
        for (const auto& [t, v] : samples) m = std::max(m, std::abs(v));
        return m;
    }
    if (samples.size() < 2)
        throw std::invalid_argument("mixed_norm: need >= 2 samples for p < inf");

    const double dt = samples[1].first - samples[0].first;
    if (!(dt > 0.0)) throw std::invalid_argument("mixed_norm: samples must be time-sorted");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double step = samples[i].first - samples[i - 1].first;
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw std::invalid_argument("mixed_norm: non-uniform sample spacing");
    }

    auto power = [p](double v) { return p == TimeLp::L1 ? std::abs(v) : v * v; };
    double acc = 0.5 * (power(samples.front().second) + power(samples.back().second));
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) acc += power(samples[i].second);
    acc *= dt;
    return p == TimeLp::L1 ? acc : std::sqrt(acc);
}

BoundaryDecayReport boundary_decay_check(const Field& f) {
    const Grid& g = f.grid();
    const double edge = 0.45 * g.lx;
    double outer = 0.0, peak = 0.0;
    for (int p = 0; p < g.nx; ++p) {
        const bool is_outer = std::abs(g.x(p)) >= edge;
        for (int q = 0; q < g.ny; ++q) {
            const double a = std::abs(f.at(p, q));
            peak = std::max(peak, a);
            if (is_outer) outer = std::max(outer, a);
        }
    }
    const bool ok = peak == 0.0 || outer <= 1e-8 * peak;
    return {ok, outer, peak};
}

} // namespace dzk
