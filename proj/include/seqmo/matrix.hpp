#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace seqmo {

// Dense row-major matrix of doubles. The single numeric container shared by
// problem instances and the network weights.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric(double tol = 0.0) const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j) {
                const double d = (*this)(i, j) - (*this)(j, i);
                if (d > tol || d < -tol) return false;
            }
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// y = A x
inline void matvec(const Matrix& a, const double* x, double* y) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row(r);
        double acc = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

// y = A^T x  (x has a.rows() entries, y has a.cols())
inline void matvec_transposed(const Matrix& a, const double* x, double* y) {
    for (std::size_t c = 0; c < a.cols(); ++c) y[c] = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const double* row = a.row(r);
        const double xr = x[r];
        for (std::size_t c = 0; c < a.cols(); ++c) y[c] += row[c] * xr;
    }
}

// A += scale * u v^T
inline void add_outer(Matrix& a, const double* u, const double* v, double scale = 1.0) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double* row = a.row(r);
        const double ur = scale * u[r];
        for (std::size_t c = 0; c < a.cols(); ++c) row[c] += ur * v[c];
    }
}

}  // namespace seqmo
