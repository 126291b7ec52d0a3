#include "dzk/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dzk {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Grid::Grid(int nx_, int ny_, double lx_) : nx(nx_), ny(ny_), lx(lx_) {
    if (nx < 4 || ny < 4)
        throw std::invalid_argument("Grid: Nx, Ny must be >= 4 (got " +
                                    std::to_string(nx) + "x" + std::to_string(ny) + ")");
    if (!is_power_of_two(nx) || !is_power_of_two(ny))
        throw std::invalid_argument("Grid: Nx, Ny must be powers of two (got " +
                                    std::to_string(nx) + "x" + std::to_string(ny) + ")");
    if (!(lx > 0.0) || !std::isfinite(lx))
        throw std::invalid_argument("Grid: Lx must be positive and finite");
}

double Grid::dy() const { return 2.0 * std::numbers::pi / ny; }

double Grid::cell_area() const { return dx() * dy(); }

double Grid::xi(int m) const { return 2.0 * std::numbers::pi * freq_x(m) / lx; }

double Grid::xi_max() const { return std::numbers::pi * nx / lx; }

double Grid::dxi() const { return 2.0 * std::numbers::pi / lx; }

} // namespace dzk
