#ifndef DZK_FIELD_HPP
#define DZK_FIELD_HPP

#include <complex>
#include <vector>

#include "dzk/grid.hpp"

namespace dzk {

// Real-valued state u(x,y) sampled at collocation points, row-major with the
// x index slow: values[p*ny + q] = u(x_p, y_q).
class Field {
public:
    Field() = default;
    explicit Field(const Grid& g) : grid_(g), values_(g.size(), 0.0) {}
    Field(const Grid& g, std::vector<double> v);

    const Grid& grid() const { return grid_; }
    double& at(int p, int q) { return values_[static_cast<std::size_t>(p) * grid_.ny + q]; }
    double at(int p, int q) const { return values_[static_cast<std::size_t>(p) * grid_.ny + q]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    // Throws naming the offending index if any sample is NaN/Inf.
    void require_finite() const;

    double max_abs() const;

private:
    Grid grid_;
    std::vector<double> values_;
};

// Fourier coefficients c(m,n) in FFT storage layout (index m <-> signed
// frequency grid.freq_x(m), likewise n). For real data the coefficients obey
// the Hermitian symmetry c(-xi,-n) = conj(c(xi,n)).
class SpectralField {
public:
    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid_(g), coeffs_(g.size()) {}

    const Grid& grid() const { return grid_; }
    std::complex<double>& at(int m, int n) {
        return coeffs_[static_cast<std::size_t>(m) * grid_.ny + n];
    }
    std::complex<double> at(int m, int n) const {
        return coeffs_[static_cast<std::size_t>(m) * grid_.ny + n];
    }
    // Access by signed frequency.
    std::complex<double>& mode(int m_signed, int n_signed) {
        return at(grid_.index_x(m_signed), grid_.index_y(n_signed));
    }
    std::complex<double> mode(int m_signed, int n_signed) const {
        return at(grid_.index_x(m_signed), grid_.index_y(n_signed));
    }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    std::vector<std::complex<double>>& coeffs() { return coeffs_; }

    // Max over modes of |c(-m,-n) - conj(c(m,n))|.
    double hermitian_defect() const;

    double max_abs() const;

private:
    Grid grid_;
    std::vector<std::complex<double>> coeffs_;
};

} // namespace dzk

#endif
