#ifndef DZK_GRID_HPP
#define DZK_GRID_HPP

#include <cstdint>

namespace dzk {

// Discretization of the cylinder R x T. The x direction is a periodic box of
// length lx centered at the origin (stand-in for the real line); the y
// direction is the native 2*pi torus.
//
// Collocation points:  x_p = -lx/2 + p*lx/nx,  y_q = 2*pi*q/ny.
// Frequencies:         xi_m = 2*pi*m/lx with m in [-nx/2, nx/2),
//                      n integer in [-ny/2, ny/2).
struct Grid {
    int nx = 0;
    int ny = 0;
    double lx = 0.0;

    Grid() = default;
    Grid(int nx_, int ny_, double lx_);

    double dx() const { return lx / nx; }
    double dy() const;              // 2*pi/ny
    double cell_area() const;       // dx*dy, the quadrature weight

    double x(int p) const { return -0.5 * lx + p * dx(); }
    double y(int q) const { return q * dy(); }

    // Signed frequency index from storage index (FFT layout).
    int freq_x(int m) const { return m < nx / 2 ? m : m - nx; }
    int freq_y(int n) const { return n < ny / 2 ? n : n - ny; }

    double xi(int m) const;         // 2*pi*freq_x(m)/lx
    double xi_max() const;          // |xi| at the Nyquist index
    double dxi() const;             // 2*pi/lx

    // Storage index of a signed frequency (wraps negatives).
    int index_x(int m_signed) const { return m_signed >= 0 ? m_signed : m_signed + nx; }
    int index_y(int n_signed) const { return n_signed >= 0 ? n_signed : n_signed + ny; }

    std::int64_t size() const { return static_cast<std::int64_t>(nx) * ny; }

    bool operator==(const Grid&) const = default;
};

bool is_power_of_two(int n);

} // namespace dzk

#endif
