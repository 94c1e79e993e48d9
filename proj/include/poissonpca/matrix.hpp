#pragma once

#include <cstddef>
#include <vector>

namespace poissonpca {

// Dense row-major matrix of doubles. Deliberately minimal: the estimators,
// the eigensolver and the projection step only need storage, products and a
// few reductions.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& storage() { return data_; }
    const std::vector<double>& storage() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

// m <- (m + m^T)/2
void symmetrize(Matrix& m);

double max_abs(const Matrix& m);
double frobenius_norm(const Matrix& m);
bool all_finite(const Matrix& m);
bool all_finite(const std::vector<double>& v);

// y = M x and y = M^T x for length-compatible vectors.
std::vector<double> matvec(const Matrix& m, const std::vector<double>& x);
std::vector<double> matvec_t(const Matrix& m, const std::vector<double>& x);

}  // namespace poissonpca
