#include "qpoly/intersection.hpp"

#include <sstream>

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {

std::vector<BigInt> parse_int_list(const std::string& part, const std::string& what) {
    std::vector<BigInt> out;
    std::string item;
    std::istringstream ss(part);
    while (std::getline(ss, item, ',')) {
        // Strip whitespace; format is ASCII with no significant whitespace.
        std::string t;
        for (char ch : item)
            if (!isspace(static_cast<unsigned char>(ch))) t += ch;
        if (t.empty() || t.find_first_not_of("0123456789-") != std::string::npos)
            throw ParseError("malformed " + what + " entry '" + item + "'");
        out.emplace_back(t);
    }
    if (out.empty()) throw ParseError("empty " + what + " list");
    return out;
}

}  // namespace

std::string IntersectionArray::text() const {
    std::string s;
    for (int i = 0; i < D; ++i) s += (i ? "," : "") + b[i].get_str();
    s += ";";
    for (int i = 1; i <= D; ++i) s += (i > 1 ? "," : "") + c[i].get_str();
    return s;
}

FeasibilityReport validate_array(const IntersectionArray& arr) {
    FeasibilityReport rep;
    const int D = arr.D;
    for (int i = 0; i < D; ++i)
        if (arr.b[i] <= 0) rep.fail("b-positive", "b_" + std::to_string(i) + " must be > 0");
    for (int i = 1; i <= D; ++i)
        if (arr.c[i] <= 0) rep.fail("c-positive", "c_" + std::to_string(i) + " must be > 0");
    if (arr.c[1] != 1) rep.fail("c1-one", "c_1 must equal 1");
    for (int i = 0; i <= D; ++i)
        if (arr.a[i] < 0)
            rep.fail("a-nonneg", "a_" + std::to_string(i) + " = " + arr.a[i].get_str() +
                                     " is negative");
    if (arr.a[0] != 0) rep.fail("a0-zero", "a_0 must equal 0");
    // Valencies k_{i+1} = k_i b_i / c_{i+1} must be positive integers.
    for (int i = 0; i <= D; ++i)
        if (arr.k[i] <= 0)
            rep.fail("k-positive", "k_" + std::to_string(i) + " is not a positive integer");
    return rep;
}

IntersectionArray parse_array(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("expected ';' separating b and c lists");
    IntersectionArray arr;
    std::vector<BigInt> bs = parse_int_list(text.substr(0, semi), "b");
    std::vector<BigInt> cs = parse_int_list(text.substr(semi + 1), "c");
    if (bs.size() != cs.size())
        throw ParseError("b list and c list must have equal length");
    const int D = static_cast<int>(bs.size());
    if (D < 3) throw DiameterError("diameter D = " + std::to_string(D) + " < 3");

    arr.D = D;
    arr.b.assign(D + 1, BigInt(0));
    arr.c.assign(D + 1, BigInt(0));
    for (int i = 0; i < D; ++i) arr.b[i] = bs[i];
    for (int i = 1; i <= D; ++i) arr.c[i] = cs[i - 1];

    const BigInt k = arr.b[0];
    arr.a.assign(D + 1, BigInt(0));
    for (int i = 0; i <= D; ++i) arr.a[i] = k - arr.b[i] - arr.c[i];

    arr.k.assign(D + 1, BigInt(0));
    arr.k[0] = 1;
    FeasibilityReport krep;
    for (int i = 0; i < D; ++i) {
        BigInt num = arr.k[i] * arr.b[i];
        if (arr.c[i + 1] != 0 && num % arr.c[i + 1] == 0) {
            arr.k[i + 1] = num / arr.c[i + 1];
        } else {
            krep.fail("k-integral", "k_" + std::to_string(i + 1) + " = k_" + std::to_string(i) +
                                        "*b_" + std::to_string(i) + "/c_" + std::to_string(i + 1) +
                                        " is not an integer");
            arr.k[i + 1] = 0;
        }
    }
    arr.n = 0;
    for (int i = 0; i <= D; ++i) arr.n += arr.k[i];

    FeasibilityReport rep = validate_array(arr);
    for (auto& v : krep.violations) rep.fail(v.first, v.second);
    if (!rep.ok) throw FeasibilityError(rep.violations);
    return arr;
}

ParameterTable compute_parameter_table(const IntersectionArray& arr) {
    const int D = arr.D;
    const int m = D + 1;
    // Work in rationals, then demand nonnegative integers.
    std::vector<Rational> q(static_cast<std::size_t>(m) * m * m, Rational(0));
    auto at = [&](int h, int i, int j) -> Rational& {
        return q[(static_cast<std::size_t>(h) * m + i) * m + j];
    };

    // Seed i = 0: p^h_{0j} = delta_{hj};  i = 1: p^h_{1j} in {c_h, a_h, b_h}.
    for (int h = 0; h <= D; ++h) {
        at(h, 0, h) = 1;
        if (h - 1 >= 0) at(h, 1, h - 1) = Rational(arr.c[h]);
        at(h, 1, h) = Rational(arr.a[h]);
        if (h + 1 <= D) at(h, 1, h + 1) = Rational(arr.b[h]);
    }

    // Ascend in i:
    // c_{i+1} p^h_{i+1,j} = c_h p^{h-1}_{ij} + (a_h - a_i) p^h_{ij}
    //                       + b_h p^{h+1}_{ij} - b_{i-1} p^h_{i-1,j}.
    for (int i = 1; i < D; ++i) {
        for (int h = 0; h <= D; ++h) {
            for (int j = 0; j <= D; ++j) {
                Rational rhs(0);
                if (h >= 1) rhs += Rational(arr.c[h]) * at(h - 1, i, j);
                rhs += Rational(arr.a[h] - arr.a[i]) * at(h, i, j);
                if (h + 1 <= D) rhs += Rational(arr.b[h]) * at(h + 1, i, j);
                if (i >= 1) rhs -= Rational(arr.b[i - 1]) * at(h, i - 1, j);
                at(h, i + 1, j) = rhs / Rational(arr.c[i + 1]);
            }
        }
    }

    ParameterTable pt;
    pt.arr = arr;
    pt.p.assign(static_cast<std::size_t>(m) * m * m, BigInt(0));
    FeasibilityReport rep;
    for (int h = 0; h <= D; ++h)
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= D; ++j) {
                const Rational& v = at(h, i, j);
                if (!is_integer(v) || v < 0) {
                    rep.fail("p-nonneg-integer",
                             "p^" + std::to_string(h) + "_{" + std::to_string(i) + "," +
                                 std::to_string(j) + "} = " + v.get_str());
                    continue;
                }
                pt.at(h, i, j) = v.get_num();
            }
    if (!rep.ok) throw FeasibilityError(rep.violations);
    return pt;
}

namespace {

// Safe parameter accessors: out-of-range subscripts contribute 0, matching
// the conventions c_0 = 0, b_D = 0.
struct Params {
    const IntersectionArray& arr;
    Rational b(int i) const {
        return (i >= 0 && i < arr.D) ? Rational(arr.b[i]) : Rational(0);
    }
    Rational c(int i) const {
        return (i >= 1 && i <= arr.D) ? Rational(arr.c[i]) : Rational(0);
    }
    Rational a(int i) const {
        return (i >= 0 && i <= arr.D) ? Rational(arr.a[i]) : Rational(0);
    }
};

}  // namespace

Rational closed_form_p2(const IntersectionArray& arr, int h, int j) {
    if (h < 0 || h > arr.D || j < 0 || j > arr.D) return Rational(0);
    if (j < h - 2 || j > h + 2) return Rational(0);
    Params s{arr};
    const Rational c2 = s.c(2), a1 = s.a(1);
    switch (j - h) {
        case -2: return s.c(h - 1) * s.c(h) / c2;
        case -1: return s.c(h) * (s.a(h - 1) + s.a(h) - a1) / c2;
        case 0:
            return (s.c(h) * (s.b(h - 1) - 1) + s.a(h) * (s.a(h) - a1 - 1) +
                    s.b(h) * (s.c(h + 1) - 1)) /
                   c2;
        case 1: return s.b(h) * (s.a(h + 1) + s.a(h) - a1) / c2;
        case 2: return s.b(h) * s.b(h + 1) / c2;
    }
    return Rational(0);
}

Rational closed_form_p3(const IntersectionArray& arr, int h, int j) {
    if (h < 0 || h > arr.D || j < 0 || j > arr.D) return Rational(0);
    if (j < h - 3 || j > h + 3) return Rational(0);
    Params s{arr};
    const Rational c2 = s.c(2), c3 = s.c(3), a1 = s.a(1), a2 = s.a(2), b1 = s.b(1);
    const Rational c2c3 = c2 * c3;
    switch (j - h) {
        case -3: return s.c(h - 2) * s.c(h - 1) * s.c(h) / c2c3;
        case -2:
            return (s.a(h) - a2) * s.c(h - 1) * s.c(h) / c2c3 +
                   s.c(h - 1) * s.c(h) * (s.a(h - 2) + s.a(h - 1) - a1) / c2c3;
        case -1:
            return (s.c(h - 1) * s.c(h) * (s.b(h - 2) - 1) +
                    s.c(h) * s.a(h - 1) * (s.a(h - 1) - a1 - 1) +
                    s.c(h) * s.b(h - 1) * (s.c(h) - 1)) /
                       c2c3 +
                   s.c(h) * (s.a(h) - a2) * (s.a(h - 1) + s.a(h) - a1) / c2c3 +
                   s.b(h) * s.c(h) * s.c(h + 1) / c2c3 - b1 * s.c(h) / c3;
        case 0:
            return s.c(h) * s.b(h - 1) * (s.a(h) + s.a(h - 1) - a1) / c2c3 +
                   (s.a(h) - a2) *
                       (s.c(h) * (s.b(h - 1) - 1) + s.a(h) * (s.a(h) - a1 - 1) +
                        s.b(h) * (s.c(h + 1) - 1)) /
                       c2c3 +
                   s.b(h) * s.c(h + 1) * (s.a(h) + s.a(h + 1) - a1) / c2c3 -
                   b1 * s.a(h) / c3;
        case 1:
            return s.c(h) * s.b(h - 1) * s.b(h) / c2c3 +
                   s.b(h) * (s.a(h) - a2) * (s.a(h + 1) + s.a(h) - a1) / c2c3 +
                   s.b(h) *
                       (s.c(h + 1) * (s.b(h) - 1) + s.a(h + 1) * (s.a(h + 1) - a1 - 1) +
                        s.b(h + 1) * (s.c(h + 2) - 1)) /
                       c2c3 -
                   b1 * s.b(h) / c3;
        case 2:
            return (s.a(h) - a2) * s.b(h) * s.b(h + 1) / c2c3 +
                   s.b(h) * s.b(h + 1) * (s.a(h + 2) + s.a(h + 1) - a1) / c2c3;
        case 3: return s.b(h) * s.b(h + 1) * s.b(h + 2) / c2c3;
    }
    return Rational(0);
}

bool is_primitive(const IntersectionArray& arr) {
    const int D = arr.D;
    if (arr.valency() == 2) {
        // Cycles: even n is bipartite; odd n needs every distance graph
        // connected, i.e. gcd(i, n) = 1 for all i <= D (so n must be prime:
        // C_9 already fails with three disjoint triangles at distance 3).
        if (arr.n % 2 == 0) return false;
        for (int i = 2; i <= D; ++i) {
            BigInt g;
            BigInt bi(i);
            mpz_gcd(g.get_mpz_t(), bi.get_mpz_t(), arr.n.get_mpz_t());
            if (g != 1) return false;
        }
        return true;
    }
    bool bipartite = true;
    for (int i = 0; i <= D; ++i)
        if (arr.a[i] != 0) bipartite = false;
    if (bipartite) return false;
    bool antipodal = true;
    for (int i = 0; i <= D; ++i) {
        if (i == D / 2) continue;
        if (arr.b[i] != arr.c[D - i]) antipodal = false;
    }
    return !antipodal;
}

}  // namespace qpoly
