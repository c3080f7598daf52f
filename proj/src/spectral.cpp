#include "qpoly/spectral.hpp"

#include <algorithm>

#include "qpoly/errors.hpp"

namespace qpoly {

RatMatrix intersection_matrix(const IntersectionArray& arr) {
    const int D = arr.D;
    RatMatrix b(D + 1, D + 1, Rational(0));
    for (int i = 0; i <= D; ++i) {
        b(i, i) = Rational(arr.a[i]);
        if (i < D) b(i, i + 1) = Rational(arr.b[i]);
        if (i > 0) b(i, i - 1) = Rational(arr.c[i]);
    }
    return b;
}

SpectralData isolate_eigenvalues(const IntersectionArray& arr, const Rational& width) {
    if (width <= 0) throw DomainError("nonpositive isolation width");
    const int D = arr.D;
    SpectralData sd;
    sd.arr = arr;
    sd.ps = build_poly_seq(arr);

    const Rational k = Rational(arr.valency());
    const RatPoly& vd1 = sd.ps.v[D + 1];
    if (vd1.eval(k) != 0) throw QpolyError("v_{D+1}(k) != 0: broken recurrence");
    RatPoly reduced = vd1.deflate(k);

    std::vector<RationalInterval> roots = isolate_real_roots(reduced, width);
    if (static_cast<int>(roots.size()) != D)
        throw QpolyError("expected " + std::to_string(D) + " eigenvalues below k, found " +
                         std::to_string(roots.size()));

    sd.theta.clear();
    sd.theta.push_back(RationalInterval::point(k));
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) sd.theta.push_back(*it);
    for (int j = 0; j + 1 <= D; ++j)
        if (sd.theta[j].lo <= sd.theta[j + 1].hi)
            throw PrecisionError("eigenvalue intervals not disjoint at requested width");

    sd.u_vals.assign(D + 1, std::vector<RationalInterval>(D + 1));
    sd.v_vals.assign(D + 1, std::vector<RationalInterval>(D + 1));
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j) {
            sd.u_vals[i][j] = sd.ps.u[i].eval(sd.theta[j]);
            sd.v_vals[i][j] = sd.ps.v[i].eval(sd.theta[j]);
        }

    const Rational n = Rational(arr.n);
    sd.m.resize(D + 1);
    for (int j = 0; j <= D; ++j) {
        RationalInterval denom;
        for (int i = 0; i <= D; ++i)
            denom += Rational(arr.k[i]) * sqr(sd.u_vals[i][j]);
        sd.m[j] = RationalInterval::point(n) / denom;
    }
    // Runtime identities: m_0 encloses 1 and sum m_j encloses |X|.
    if (!sd.m[0].contains(Rational(1)))
        throw QpolyError("multiplicity identity m_0 = 1 violated");
    RationalInterval total;
    for (int j = 0; j <= D; ++j) total += sd.m[j];
    if (!total.contains(n)) throw QpolyError("multiplicity identity sum m_j = |X| violated");
    return sd;
}

KreinTable krein_parameters(const SpectralData& sd, const Rational& zero_width) {
    const int D = sd.arr.D;
    const int md = D + 1;
    KreinTable kt;
    kt.D = D;
    kt.zero_width = zero_width;
    kt.q.assign(static_cast<std::size_t>(md) * md * md, RationalInterval());
    kt.flags.assign(kt.q.size(), ZeroFlag::NumericZero);
    const Rational n = Rational(sd.arr.n);
    auto idx = [md](int h, int i, int j) { return (h * md + i) * md + j; };

    for (int i = 0; i <= D; ++i)
        for (int j = i; j <= D; ++j)
            for (int h = 0; h <= D; ++h) {
                RationalInterval s;
                for (int l = 0; l <= D; ++l)
                    s += Rational(sd.arr.k[l]) *
                         (sd.u_vals[l][i] * sd.u_vals[l][j] * sd.u_vals[l][h]);
                RationalInterval q = sd.m[i] * sd.m[j] * s;
                q = q / RationalInterval::point(n);
                kt.q[idx(h, i, j)] = q;
                kt.q[idx(h, j, i)] = q;
                ZeroFlag f;
                if (!q.contains_zero())
                    f = ZeroFlag::CertNonzero;
                else if (q.width() <= zero_width)
                    f = ZeroFlag::NumericZero;
                else
                    throw PrecisionError("Krein interval q^" + std::to_string(h) + "_{" +
                                         std::to_string(i) + "," + std::to_string(j) +
                                         "} straddles zero wider than threshold");
                kt.flags[idx(h, i, j)] = f;
                kt.flags[idx(h, j, i)] = f;
            }
    return kt;
}

std::optional<std::vector<int>> find_q_ordering(const KreinTable& kt) {
    const int D = kt.D;
    for (int t = 1; t <= D; ++t) {
        std::vector<int> order = {0, t};
        std::vector<bool> used(D + 1, false);
        used[0] = used[t] = true;
        bool ok = true;
        for (int r = 1; r < D && ok; ++r) {
            int next = -1;
            for (int s = 0; s <= D; ++s) {
                if (used[s]) continue;
                if (kt.flag(s, t, order[r]) == ZeroFlag::CertNonzero) {
                    if (next != -1) { ok = false; break; }
                    next = s;
                }
            }
            if (!ok || next == -1) { ok = false; break; }
            order.push_back(next);
            used[next] = true;
        }
        if (!ok) continue;
        // Full verification of the vanishing pattern under this ordering.
        for (int h = 0; h <= D && ok; ++h)
            for (int i = 0; i <= D && ok; ++i)
                for (int j = 0; j <= D && ok; ++j) {
                    ZeroFlag f = kt.flag(order[h], order[i], order[j]);
                    bool above = h > i + j || i > h + j || j > h + i;
                    bool boundary = h == i + j || i == h + j || j == h + i;
                    if (above && f != ZeroFlag::NumericZero) ok = false;
                    if (boundary && f != ZeroFlag::CertNonzero) ok = false;
                }
        if (ok) return order;
    }
    return std::nullopt;
}

TransitionMatrices build_transition_matrices(const SpectralData& sd) {
    const int D = sd.arr.D;
    TransitionMatrices tm;
    tm.S = IntervalMatrix(D + 1, D + 1);
    tm.S_inv = IntervalMatrix(D + 1, D + 1);
    const Rational inv_n = Rational(1) / Rational(sd.arr.n);
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j) {
            tm.S(i, j) = inv_n * (sd.m[j] * sd.u_vals[i][j]);
            tm.S_inv(i, j) = sd.v_vals[j][i];
        }
    tm.S_alt = IntervalMatrix(D, D);
    for (int i = 1; i <= D; ++i)
        for (int j = 1; j <= D; ++j) tm.S_alt(i - 1, j - 1) = tm.S(i, j) - tm.S(0, j);
    return tm;
}

bool encloses_identity(const IntervalMatrix& prod) {
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (!prod(i, j).contains(Rational(i == j ? 1 : 0))) return false;
    return true;
}

std::vector<IntervalMatrix> build_b_blocks(const SpectralData& sd, const ParameterTable& pt) {
    const int D = sd.arr.D;
    // The four commutator-like families, as signed (left,right) index pairs
    // around the dual matrix: A_a X A_b with X = A_i^*.
    struct Term { int sign, a, b; };
    const std::vector<std::vector<Term>> fam = {
        {{+1, 2, 1}, {-1, 1, 2}},  // A_2 X A - A X A_2
        {{+1, 3, 0}, {-1, 0, 3}},  // A_3 X - X A_3
        {{+1, 2, 0}, {-1, 0, 2}},  // A_2 X - X A_2
        {{+1, 1, 0}, {-1, 0, 1}},  // A X - X A
    };

    std::vector<IntervalMatrix> blocks;
    for (int bi = 1; bi <= D; ++bi) {
        // theta*_l = m_{bi} u_l(theta_{bi})
        std::vector<RationalInterval> ts(D + 1);
        for (int l = 0; l <= D; ++l) ts[l] = sd.m[bi] * sd.u_vals[l][bi];
        // T_l = sum_{s,t} theta*_s theta*_t p^l_{st}
        std::vector<RationalInterval> tl(D + 1);
        for (int l = 0; l <= D; ++l) {
            RationalInterval acc;
            for (int s = 0; s <= D; ++s)
                for (int t = 0; t <= D; ++t) {
                    const BigInt& p = pt.at(l, s, t);
                    if (p == 0) continue;
                    acc += Rational(p) * (ts[s] * ts[t]);
                }
            tl[l] = acc;
        }
        auto inner = [&](int a, int b, int c, int d) {
            RationalInterval acc;
            for (int l = 0; l <= D; ++l) {
                BigInt w = sd.arr.k[l] * pt.at(l, a, c) * pt.at(l, b, d);
                if (w == 0) continue;
                acc += Rational(w) * tl[l];
            }
            return acc;
        };
        IntervalMatrix blk(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                RationalInterval acc;
                for (const Term& x : fam[r])
                    for (const Term& y : fam[c]) {
                        RationalInterval v = inner(x.a, x.b, y.a, y.b);
                        acc = (x.sign * y.sign > 0) ? acc + v : acc - v;
                    }
                blk(r, c) = acc;
            }
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

bool check_det_factorization(const BigInt& det_g, const BigInt& n, const TransitionMatrices& tm,
                             const std::vector<IntervalMatrix>& b_blocks) {
    // The basis change from the commutator families to their starred
    // counterparts has matrix |X| * S^alt per family, so the determinant
    // identity reads det(G) = (|X|^D det S^alt)^{-8} prod det(B_i).
    const int D = static_cast<int>(tm.S_alt.rows());
    BigInt nD = 1;
    for (int i = 0; i < D; ++i) nD *= n;
    RationalInterval det_alt = Rational(nD) * interval_determinant(tm.S_alt);
    if (det_alt.contains_zero())
        throw PrecisionError("det(S^alt) interval contains zero; refine spectral data");
    RationalInterval acc = RationalInterval::point(Rational(1));
    for (int e = 0; e < 8; ++e) acc = acc / det_alt;
    for (const auto& blk : b_blocks) acc *= interval_determinant(blk);
    return acc.contains(Rational(det_g));
}

bool primitivity_witness(const SpectralData& sd) {
    const int D = sd.arr.D;
    for (int i = 1; i <= D; ++i)
        for (int j = 1; j <= D; ++j)
            if (sd.u_vals[i][j].contains(Rational(1))) return false;
    return true;
}

OracleResult run_spectral_oracle(const IntersectionArray& arr, const Rational& zero_width,
                                 int max_rounds) {
    Rational width = zero_width / BigInt("10000000000");  // headroom below the zero threshold
    const bool primitive = is_primitive(arr);
    for (int round = 0; round < max_rounds; ++round, width /= BigInt("1000000000000")) {
        SpectralData sd = isolate_eigenvalues(arr, width);
        if (primitive && !primitivity_witness(sd)) continue;
        try {
            KreinTable kt = krein_parameters(sd, zero_width);
            OracleResult res{std::move(sd), std::move(kt), std::nullopt};
            res.ordering = find_q_ordering(res.kt);
            return res;
        } catch (const PrecisionError&) {
            // refine and retry
        }
    }
    throw PrecisionError("refinement budget exhausted in spectral oracle");
}

}  // namespace qpoly
