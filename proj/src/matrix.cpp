#include "qpoly/matrix.hpp"

#include <cstddef>

#include "qpoly/errors.hpp"

namespace qpoly {

BigInt exact_determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Smallest nonzero |pivot| in column k, rows k..n-1.
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m(i, k) == 0) continue;
            if (piv == n || mpz_cmpabs(m(i, k).get_mpz_t(), m(piv, k).get_mpz_t()) < 0) piv = i;
        }
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev_pivot = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : BigInt(-m(n - 1, n - 1));
}

std::vector<Rational> characteristic_polynomial(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("characteristic polynomial of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    // Faddeev-LeVerrier: M <- A*M + c_{n-k}*I, c_{n-k-1} = -tr(A*M)/(k+1).
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = a * m;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
        }
    }
    return c;
}

RationalInterval interval_determinant(const IntervalMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return RationalInterval(Rational(1));
    if (n == 1) return m(0, 0);
    RationalInterval det;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        IntervalMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        RationalInterval term = m(0, j) * interval_determinant(minor);
        det = sign > 0 ? det + term : det - term;
        sign = -sign;
    }
    return det;
}

}  // namespace qpoly
