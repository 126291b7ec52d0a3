#include "dzk/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dzk {

Field::Field(const Grid& g, std::vector<double> v) : grid_(g), values_(std::move(v)) {
    if (static_cast<std::int64_t>(values_.size()) != g.size())
        throw std::invalid_argument("Field: value count does not match grid");
}

void Field::require_finite() const {
    for (int p = 0; p < grid_.nx; ++p)
        for (int q = 0; q < grid_.ny; ++q)
            if (!std::isfinite(at(p, q)))
                throw std::invalid_argument("Field: non-finite sample at (p,q)=(" +
                                            std::to_string(p) + "," + std::to_string(q) + ")");
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double SpectralField::hermitian_defect() const {
    double worst = 0.0;
    for (int m = 0; m < grid_.nx; ++m) {
        int mc = m == 0 ? 0 : grid_.nx - m;
        for (int n = 0; n < grid_.ny; ++n) {
            int nc = n == 0 ? 0 : grid_.ny - n;
            worst = std::max(worst, std::abs(at(mc, nc) - std::conj(at(m, n))));
        }
    }
    return worst;
}

double SpectralField::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

} // namespace dzk
