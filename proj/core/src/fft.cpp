#include "dzk/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dzk::fft {

namespace {

// Plans are cached per (nx, ny, sign) for the life of the process. Planning
// is serialized (FFTW's planner is not thread-safe); execution through
// fftw_execute_dft on caller buffers is. FFTW_UNALIGNED lets the plan run on
// ordinary vector storage.
class PlanCache {
public:
    static fftw_plan get(int nx, int ny, int sign) {
        static PlanCache cache;
        std::lock_guard<std::mutex> lock(cache.mu_);
        auto key = std::make_tuple(nx, ny, sign);
        auto it = cache.plans_.find(key);
        if (it != cache.plans_.end()) return it->second;

        std::vector<std::complex<double>> scratch(static_cast<std::size_t>(nx) * ny);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan p = fftw_plan_dft_2d(nx, ny, buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fft: FFTW plan creation failed");
        cache.plans_.emplace(key, p);
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(const Grid& g, std::vector<std::complex<double>>& data, int sign) {
    fftw_plan p = PlanCache::get(g.nx, g.ny, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, buf, buf);
}

void apply_x_offset_twist(const Grid& g, std::vector<std::complex<double>>& data) {
    for (int m = 1; m < g.nx; m += 2) {
        auto* row = data.data() + static_cast<std::size_t>(m) * g.ny;
        for (int n = 0; n < g.ny; ++n) row[n] = -row[n];
    }
}

} // namespace

SpectralField forward(const Field& f) {
    f.require_finite();
    const Grid& g = f.grid();
    SpectralField out(g);
    auto& c = out.coeffs();
    const auto& v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
    execute(g, c, FFTW_FORWARD);
    apply_x_offset_twist(g, c);
    return out;
}

InverseResult inverse_with_residual(const SpectralField& f) {
    const Grid& g = f.grid();
    std::vector<std::complex<double>> work = f.coeffs();
    apply_x_offset_twist(g, work);
    execute(g, work, FFTW_BACKWARD);

    const double scale = 1.0 / (static_cast<double>(g.nx) * g.ny);
    InverseResult r{Field(g), 0.0};
    auto& v = r.field.values();
    for (std::size_t i = 0; i < work.size(); ++i) {
        v[i] = work[i].real() * scale;
        double im = std::abs(work[i].imag()) * scale;
        if (im > r.imag_max) r.imag_max = im;
    }
    return r;
}

Field inverse(const SpectralField& f) { return inverse_with_residual(f).field; }

SpectralField zero_pad(const SpectralField& f, int factor) {
    if (factor != 1 && factor != 2 && factor != 4)
        throw std::invalid_argument("fft::zero_pad: factor must be 1, 2 or 4");
    const Grid& g = f.grid();
    if (factor == 1) return f;

    Grid big(g.nx * factor, g.ny * factor, g.lx);
    SpectralField out(big);
    const double scale = static_cast<double>(factor) * factor;

    for (int m = 0; m < g.nx; ++m) {
        int mm = g.freq_x(m);
        // Nyquist rows split half-and-half between +-Nx/2 on the fine grid.
        const bool mny = (mm == -g.nx / 2);
        for (int n = 0; n < g.ny; ++n) {
            int nn = g.freq_y(n);
            const bool nny = (nn == -g.ny / 2);
            std::complex<double> c = f.at(m, n) * scale;

            const int mts[2] = {mm, g.nx / 2};
            const int nts[2] = {nn, g.ny / 2};
            const double w = (mny ? 0.5 : 1.0) * (nny ? 0.5 : 1.0);
            for (int a = 0; a < (mny ? 2 : 1); ++a)
                for (int b = 0; b < (nny ? 2 : 1); ++b)
                    out.mode(mts[a], nts[b]) += c * w;
        }
    }
    return out;
}

} // namespace dzk::fft
