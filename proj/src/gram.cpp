#include "qpoly/gram.hpp"

#include <chrono>

#include "qpoly/errors.hpp"

namespace qpoly {

GramMatrix build_gram(const ParameterTable& pt) {
    const IntersectionArray& arr = pt.arr;
    const int D = arr.D;
    if (D < 3) throw DiameterError("Gram matrix needs D >= 3");

    const BigInt k = arr.valency(), k2 = arr.k[2], k3 = arr.k[3];
    const BigInt a1 = arr.a[1], a2 = arr.a[2];
    const BigInt b1 = arr.b[1], b2 = arr.b[2];
    const BigInt c2 = arr.c[2], c3 = arr.c[3];

    // phi coefficients of p^0..p^3 (the common factor 2 applied at the end).
    const BigInt w0 = k * k2;
    const BigInt w1 = k2 * a1 * a2 - k * b1 * b1;
    const BigInt w2 = k2 * (c2 * (b1 - 1) - a2 * (a1 + 1) + b2 * (c3 - 1));
    const BigInt w3 = -k3 * c3 * c3;

    GramMatrix g;
    g.D = D;
    g.entries = IntMatrix(4 * D, 4 * D, BigInt(0));

    for (int i = 1; i <= D; ++i)
        for (int j = 1; j <= D; ++j) {
            const BigInt& p0 = pt.at(0, i, j);
            const BigInt& p1 = pt.at(1, i, j);
            const BigInt& p2 = pt.at(2, i, j);
            const BigInt& p3 = pt.at(3, i, j);
            const BigInt diag = (i == j) ? arr.k[i] : BigInt(0);

            BigInt phi = 2 * (w0 * p0 + w1 * p1 + w2 * p2 + w3 * p3);
            BigInt cross = 2 * k2 * (p1 - p2);

            g.entries(g.index(0, i), g.index(0, j)) = phi;
            g.entries(g.index(0, i), g.index(1, j)) = b2 * cross;
            g.entries(g.index(0, i), g.index(2, j)) = a2 * cross;
            g.entries(g.index(0, i), g.index(3, j)) = c2 * cross;
            g.entries(g.index(1, i), g.index(0, j)) = b2 * cross;
            g.entries(g.index(2, i), g.index(0, j)) = a2 * cross;
            g.entries(g.index(3, i), g.index(0, j)) = c2 * cross;
            g.entries(g.index(1, i), g.index(1, j)) = 2 * k3 * (diag - p3);
            g.entries(g.index(2, i), g.index(2, j)) = 2 * k2 * (diag - p2);
            g.entries(g.index(3, i), g.index(3, j)) = 2 * k * (diag - p1);
        }
    return g;
}

bool certify_psd(const GramMatrix& g) {
    std::vector<Rational> c = characteristic_polynomial(to_rational(g.entries));
    const std::size_t n = g.entries.rows();
    // c[n-r] is the coefficient of lambda^{n-r}; e_r = (-1)^r c[n-r].
    for (std::size_t r = 0; r <= n; ++r) {
        Rational e = (r % 2 == 0) ? c[n - r] : Rational(-c[n - r]);
        if (e < 0) return false;
    }
    return true;
}

QPolyVerdict decide_q_polynomial(const IntersectionArray& arr) {
    auto start = std::chrono::steady_clock::now();
    ParameterTable pt = compute_parameter_table(arr);
    GramMatrix g = build_gram(pt);
    QPolyVerdict verdict;
    verdict.D = arr.D;
    verdict.n = arr.n;
    verdict.primitive = is_primitive(arr);
    verdict.det_g = exact_determinant(g.entries);
    auto stop = std::chrono::steady_clock::now();
    verdict.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
            .count();
    if (!verdict.primitive)
        throw HypothesisError("array is not primitive; the det(G) criterion does not apply",
                              verdict.det_g.get_str());
    verdict.is_q_polynomial = (verdict.det_g == 0);
    return verdict;
}

}  // namespace qpoly
