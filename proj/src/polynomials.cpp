#include "qpoly/polynomials.hpp"

#include <algorithm>

#include "qpoly/errors.hpp"

namespace qpoly {

RatPoly RatPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < coef.size(); ++i)
        d.push_back(coef[i] * Rational(static_cast<long>(i)));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rational> s(std::max(coef.size(), o.coef.size()), Rational(0));
    for (std::size_t i = 0; i < coef.size(); ++i) s[i] += coef[i];
    for (std::size_t i = 0; i < o.coef.size(); ++i) s[i] += o.coef[i];
    return RatPoly(std::move(s));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rational> s(std::max(coef.size(), o.coef.size()), Rational(0));
    for (std::size_t i = 0; i < coef.size(); ++i) s[i] += coef[i];
    for (std::size_t i = 0; i < o.coef.size(); ++i) s[i] -= o.coef[i];
    return RatPoly(std::move(s));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rational> s(coef.size() + o.coef.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coef.size(); ++i)
        for (std::size_t j = 0; j < o.coef.size(); ++j) s[i + j] += coef[i] * o.coef[j];
    return RatPoly(std::move(s));
}

RatPoly RatPoly::scaled(const Rational& s) const {
    std::vector<Rational> c = coef;
    for (auto& x : c) x *= s;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::remainder(const RatPoly& o) const {
    if (o.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = coef;
    const int dn = o.degree();
    while (static_cast<int>(r.size()) - 1 >= dn) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dn) break;
        Rational f = r.back() / o.leading();
        std::size_t shift = r.size() - 1 - dn;
        for (int i = 0; i <= dn; ++i) r[shift + i] -= f * o.coef[i];
        r.pop_back();
    }
    return RatPoly(std::move(r));
}

RatPoly RatPoly::deflate(const Rational& root) const {
    // Synthetic division by (lambda - root).
    if (is_zero()) return RatPoly();
    std::vector<Rational> q(coef.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = coef.size(); i-- > 1;) {
        carry = coef[i] + carry * root;
        q[i - 1] = carry;
    }
    Rational rem = coef[0] + carry * root;
    if (rem != 0) throw DomainError("deflation by a non-root");
    return RatPoly(std::move(q));
}

PolySeq build_poly_seq(const IntersectionArray& arr) {
    const int D = arr.D;
    PolySeq ps;
    ps.v.resize(D + 2);
    ps.v[0] = RatPoly({Rational(1)});
    ps.v[1] = RatPoly({Rational(0), Rational(1)});
    RatPoly lambda = ps.v[1];
    // lambda v_i = c_{i+1} v_{i+1} + a_i v_i + b_{i-1} v_{i-1}, c_{D+1} := 1.
    for (int i = 1; i <= D; ++i) {
        Rational ci1 = (i + 1 <= D) ? Rational(arr.c[i + 1]) : Rational(1);
        RatPoly t = lambda * ps.v[i] - ps.v[i].scaled(Rational(arr.a[i])) -
                    ps.v[i - 1].scaled(Rational(arr.b[i - 1]));
        ps.v[i + 1] = t.scaled(Rational(1) / ci1);
    }
    ps.u.resize(D + 1);
    for (int i = 0; i <= D; ++i) ps.u[i] = ps.v[i].scaled(Rational(1) / Rational(arr.k[i]));
    return ps;
}

SturmChain::SturmChain(const RatPoly& p) {
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = chain[chain.size() - 2].remainder(chain.back());
        if (r.is_zero()) break;
        chain.push_back(r.scaled(Rational(-1)));
    }
}

int SturmChain::variations(const Rational& x) const {
    int var = 0, last = 0;
    for (const auto& q : chain) {
        Rational v = q.eval(x);
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
}

namespace {

Rational cauchy_bound(const RatPoly& p) {
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coef[i] / p.leading())));
    return m + 2;
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const RatPoly& p, const Rational& target) {
    std::vector<RationalInterval> roots;
    RatPoly w = p;
    // Bisection points hitting a root exactly are recorded as point
    // intervals and the factor deflated away; isolation restarts on the
    // quotient. All roots here are simple.
    for (;;) {
        if (w.degree() <= 0) break;
        SturmChain chain(w);
        Rational bound = cauchy_bound(w);
        struct Seg { Rational lo, hi; int count; };
        std::vector<Seg> work;
        std::vector<Seg> isolated;
        int total = chain.count_roots(-bound, bound);
        if (total > 0) work.push_back({-bound, bound, total});
        bool deflated = false;
        while (!work.empty()) {
            Seg s = work.back();
            work.pop_back();
            if (s.count == 1) {
                isolated.push_back(s);
                continue;
            }
            Rational mid = (s.lo + s.hi) / 2;
            if (w.eval(mid) == 0) {
                roots.emplace_back(mid, mid);
                w = w.deflate(mid);
                deflated = true;
                break;
            }
            int left = chain.count_roots(s.lo, mid);
            if (left > 0) work.push_back({s.lo, mid, left});
            if (s.count - left > 0) work.push_back({mid, s.hi, s.count - left});
        }
        if (deflated) continue;
        // Refine each isolated interval by sign bisection.
        for (auto& s : isolated) {
            Rational lo = s.lo, hi = s.hi;
            int slo = sgn(w.eval(lo));
            bool exact = false;
            while (hi - lo > target) {
                Rational mid = (lo + hi) / 2;
                Rational vm = w.eval(mid);
                if (vm == 0) {
                    roots.emplace_back(mid, mid);
                    exact = true;
                    break;
                }
                if (sgn(vm) == slo)
                    lo = mid;
                else
                    hi = mid;
            }
            if (!exact) roots.emplace_back(lo, hi);
        }
        break;
    }
    std::sort(roots.begin(), roots.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return roots;
}

}  // namespace qpoly
