#include "dzk/projector.hpp"

#include <cmath>
#include <stdexcept>

namespace dzk {

bool in_dyadic_block(int j, double r) {
    r = std::abs(r);
    if (j == 0) return r < 1.0;
    return std::ldexp(1.0, j - 1) <= r && r < std::ldexp(1.0, j);
}

int dyadic_block_of(double r) {
    r = std::abs(r);
    if (r < 1.0) return 0;
    int j = static_cast<int>(std::floor(std::log2(r))) + 1;
    // log2 rounding can be off by one at block edges; fix up exactly.
    while (j > 1 && r < std::ldexp(1.0, j - 1)) --j;
    while (!(r < std::ldexp(1.0, j))) ++j;
    return j;
}

SpectralField lp_project(const SpectralField& f, int j, int k) {
    if (j < 0 || k < 0) throw std::invalid_argument("lp_project: j, k must be >= 0");
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mi = 0; mi < g.nx; ++mi) {
        if (!in_dyadic_block(j, g.xi(mi))) continue;
        for (int ni = 0; ni < g.ny; ++ni) {
            if (!in_dyadic_block(k, g.freq_y(ni))) continue;
            out.at(mi, ni) = f.at(mi, ni);
        }
    }
    return out;
}

} // namespace dzk
