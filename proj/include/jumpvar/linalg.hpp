#pragma once

#include <cstddef>
#include <vector>

namespace jumpvar {

/// Minimal dense row-major matrix; covariance matrices here are tiny
/// (one row per asset), so no external linear algebra dependency is pulled in.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<double> operator*(const std::vector<double>& v) const;

    double max_abs() const;

private:
    std::size_t rows_, cols_;
    std::vector<double> data_;
};

/// Lower-triangular Cholesky factor A with A * A^T = sigma. Requires sigma
/// symmetric and positive definite; a non-positive pivot (relative tolerance
/// 1e-12) throws with the pivot index.
Matrix cholesky_decompose(const Matrix& sigma);

/// Solves M x = b for symmetric positive definite M via Cholesky.
std::vector<double> solve_spd(const Matrix& m, const std::vector<double>& b);

double dot(const std::vector<double>& a, const std::vector<double>& b);

/// w^T M w for square M.
double quadratic_form(const std::vector<double>& w, const Matrix& m);

}  // namespace jumpvar
