#pragma once

#include <optional>
#include <string>

#include "qpoly/intersection.hpp"
#include "qpoly/matrix.hpp"

namespace qpoly {

// Canonical row/column layout of G: families ordered (W, X, Y, Z) with
//   W_i = A_2 E_i^* A - A E_i^* A_2,  X_i = A_3 E_i^* - E_i^* A_3,
//   Y_i = A_2 E_i^* - E_i^* A_2,      Z_i = A E_i^* - E_i^* A,
// inner index i = 1..D fastest. Entries are exact integers, stored with the
// common factor 2 kept.
struct GramMatrix {
    int D = 0;
    IntMatrix entries;  // 4D x 4D

    // Row index of family f (0=W,1=X,2=Y,3=Z), inner index i in 1..D.
    std::size_t index(int f, int i) const { return static_cast<std::size_t>(f) * D + (i - 1); }
};

GramMatrix build_gram(const ParameterTable& pt);

// Exact PSD certificate: the characteristic polynomial written as
// sum (-1)^r e_r lambda^{4D-r} must have e_r >= 0 for every r.
bool certify_psd(const GramMatrix& g);

struct QPolyVerdict {
    bool primitive = false;
    BigInt det_g;
    std::optional<bool> is_q_polynomial;  // absent when the hypothesis fails
    // diagnostics
    int D = 0;
    BigInt n;
    double elapsed_ms = 0.0;
};

// The main gate: primitivity hypothesis, exact det(G), verdict
// is_q_polynomial = (det G == 0). Throws FeasibilityError for infeasible
// arrays and HypothesisError (carrying det G) for non-primitive ones.
QPolyVerdict decide_q_polynomial(const IntersectionArray& arr);

}  // namespace qpoly
