#pragma once

#include <cstddef>
#include <vector>

#include "qpoly/numeric.hpp"

namespace qpoly {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix out(rows_, o.cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using IntervalMatrix = Matrix<RationalInterval>;

// Exact determinant via fraction-free (Bareiss) elimination. Pivot choice:
// nonzero entry of smallest absolute value in the current column, which
// limits intermediate growth. Result is independent of pivot order.
BigInt exact_determinant(IntMatrix m);

// Characteristic polynomial det(lambda*I - A) of a square rational matrix,
// coefficients returned ascending (c[0] + c[1]*lambda + ... + c[n]*lambda^n),
// computed exactly by the Faddeev-LeVerrier recurrence.
std::vector<Rational> characteristic_polynomial(const RatMatrix& a);

// Determinant of a small interval matrix by Laplace expansion (enclosure).
RationalInterval interval_determinant(const IntervalMatrix& m);

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

}  // namespace qpoly
