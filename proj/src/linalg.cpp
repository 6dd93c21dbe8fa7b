#include "jumpvar/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jumpvar {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in multiply");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const double v = (*this)(i, k);
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

std::vector<double> Matrix::operator*(const std::vector<double>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<double> r(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

Matrix cholesky_decompose(const Matrix& sigma) {
    const std::size_t n = sigma.rows();
    if (sigma.cols() != n) throw std::invalid_argument("cholesky: matrix not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(sigma(i, j) - sigma(j, i)) >
                1e-12 * std::max(1.0, sigma.max_abs())) {
                throw std::invalid_argument("cholesky: matrix not symmetric");
            }

    const double tol = 1e-12 * std::max(1.0, sigma.max_abs());
    Matrix a(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = sigma(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= a(j, k) * a(j, k);
        if (!(pivot > tol)) {
            throw std::runtime_error("cholesky: non-positive pivot at index " + std::to_string(j) +
                                     " (value " + std::to_string(pivot) + ")");
        }
        a(j, j) = std::sqrt(pivot);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = sigma(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
            a(i, j) = s / a(j, j);
        }
    }
    return a;
}

std::vector<double> solve_spd(const Matrix& m, const std::vector<double>& b) {
    const Matrix a = cholesky_decompose(m);
    const std::size_t n = b.size();
    std::vector<double> y(n), x(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= a(i, k) * y[k];
        y[i] = s / a(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= a(k, ii) * x[k];
        x[ii] = s / a(ii, ii);
    }
    return x;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double quadratic_form(const std::vector<double>& w, const Matrix& m) {
    return dot(w, m * w);
}

}  // namespace jumpvar
