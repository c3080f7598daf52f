#pragma once

#include <vector>

#include "qpoly/intersection.hpp"
#include "qpoly/numeric.hpp"

namespace qpoly {

// Univariate polynomial with exact rational coefficients, ascending order.
struct RatPoly {
    std::vector<Rational> coef;  // coef[i] multiplies lambda^i; normalized (no zero lead)

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> c) : coef(std::move(c)) { trim(); }

    static RatPoly constant(const Rational& v) { return RatPoly({v}); }

    int degree() const { return static_cast<int>(coef.size()) - 1; }  // -1 for zero poly
    bool is_zero() const { return coef.empty(); }
    const Rational& leading() const { return coef.back(); }

    void trim() {
        while (!coef.empty() && coef.back() == 0) coef.pop_back();
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RationalInterval eval(const RationalInterval& x) const {
        RationalInterval acc;
        for (auto it = coef.rbegin(); it != coef.rend(); ++it)
            acc = acc * x + RationalInterval(*it);
        return acc;
    }

    RatPoly derivative() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly scaled(const Rational& s) const;

    // Euclidean remainder of *this by o (o nonzero).
    RatPoly remainder(const RatPoly& o) const;

    // Exact division by (lambda - root); the remainder must vanish.
    RatPoly deflate(const Rational& root) const;
};

// Three-term recurrence polynomial families of an intersection array:
// v_0..v_{D+1} (with v_i(A) = A_i and the eigenvalues as zeros of v_{D+1})
// and u_i = v_i / k_i.
struct PolySeq {
    std::vector<RatPoly> v;  // size D+2
    std::vector<RatPoly> u;  // size D+1
};

PolySeq build_poly_seq(const IntersectionArray& arr);

// Sturm chain of a squarefree polynomial and certified real-root isolation.
struct SturmChain {
    std::vector<RatPoly> chain;

    explicit SturmChain(const RatPoly& p);

    int variations(const Rational& x) const;
    // Number of distinct real roots in (a, b].
    int count_roots(const Rational& a, const Rational& b) const;
};

// Isolate all real roots of p (assumed squarefree) into disjoint intervals,
// each refined by bisection to width <= target. Roots hit exactly by a
// bisection point are returned as point intervals. Sorted ascending.
std::vector<RationalInterval> isolate_real_roots(const RatPoly& p, const Rational& target);

}  // namespace qpoly
