#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>

#include "qpoly/errors.hpp"

namespace qpoly {

// Arbitrary-precision signed integer. Exact, closed under +,-,*.
using BigInt = mpz_class;

// Exact rational. gmp keeps values canonical (lowest terms, positive
// denominator) for all arithmetic results; mpq_class constructed from raw
// numerator/denominator is canonicalized explicitly where we build them.
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

enum class Sign { Positive, Negative, Indeterminate };

// Closed interval with exact rational endpoints. All arithmetic is an
// enclosure; with rational endpoints the enclosure is tight (no rounding).
struct RationalInterval {
    Rational lo, hi;

    RationalInterval() : lo(0), hi(0) {}
    explicit RationalInterval(const Rational& point) : lo(point), hi(point) {}
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw DomainError("interval with lo > hi");
    }

    static RationalInterval point(const Rational& v) { return RationalInterval(v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    bool intersects(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }

    RationalInterval operator+(const RationalInterval& o) const {
        return {lo + o.lo, hi + o.hi};
    }
    RationalInterval operator-(const RationalInterval& o) const {
        return {lo - o.hi, hi - o.lo};
    }
    RationalInterval operator-() const { return {-hi, -lo}; }

    RationalInterval operator*(const RationalInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }

    RationalInterval operator/(const RationalInterval& o) const {
        if (o.contains_zero()) throw DomainError("division by interval containing zero");
        return *this * RationalInterval(Rational(1) / o.hi, Rational(1) / o.lo);
    }

    RationalInterval& operator+=(const RationalInterval& o) { return *this = *this + o; }
    RationalInterval& operator-=(const RationalInterval& o) { return *this = *this - o; }
    RationalInterval& operator*=(const RationalInterval& o) { return *this = *this * o; }

    std::string str() const { return "[" + lo.get_str() + ", " + hi.get_str() + "]"; }
};

inline RationalInterval operator*(const Rational& s, const RationalInterval& x) {
    return RationalInterval(s) * x;
}

// Tight square: never dips below zero the way x*x would for straddling x.
inline RationalInterval sqr(const RationalInterval& x) {
    Rational a = x.lo * x.lo, b = x.hi * x.hi;
    if (x.contains_zero()) return {Rational(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

inline Sign sign_certify(const RationalInterval& x) {
    if (x.lo > 0) return Sign::Positive;
    if (x.hi < 0) return Sign::Negative;
    return Sign::Indeterminate;
}

}  // namespace qpoly
