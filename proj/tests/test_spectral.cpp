#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpoly/catalog.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/intersection.hpp"
#include "qpoly/polynomials.hpp"
#include "qpoly/spectral.hpp"

using namespace qpoly;

namespace {

Rational tiny(int neg_exp) {
    BigInt p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned>(neg_exp));
    return make_rational(1, p10);
}

}  // namespace

TEST_CASE("three-term polynomial families") {
    IntersectionArray arr = parse_array("6,4,2;1,2,3");  // Hamming H(3,3)
    PolySeq ps = build_poly_seq(arr);
    REQUIRE(ps.v.size() == 5);
    REQUIRE(ps.u.size() == 4);
    CHECK(ps.v[0].coef == std::vector<Rational>{Rational(1)});
    CHECK(ps.v[1].coef == std::vector<Rational>{Rational(0), Rational(1)});
    // v_2 = (lambda^2 - lambda - 6)/2
    CHECK(ps.v[2].coef ==
          std::vector<Rational>{Rational(-3), make_rational(-1, 2), make_rational(1, 2)});

    // u_i(k) = 1 and v_i(k) = k_i at the valency, for every catalog array
    for (const auto& e : shipped_catalog()) {
        CAPTURE(e.name);
        IntersectionArray a = parse_array(e.array_text);
        PolySeq f = build_poly_seq(a);
        Rational k(a.valency());
        for (int i = 0; i <= a.D; ++i) {
            CHECK(f.u[i].eval(k) == 1);
            CHECK(f.v[i].eval(k) == Rational(a.k[i]));
        }
        CHECK(f.v[a.D + 1].eval(k) == 0);
    }
}

TEST_CASE("real root isolation with a Sturm chain") {
    // (lambda - 1)(lambda - 2)(lambda + 3) = lambda^3 - 7 lambda + 6
    RatPoly p({Rational(6), Rational(-7), Rational(0), Rational(1)});
    SturmChain chain(p);
    CHECK(chain.count_roots(Rational(-4), Rational(3)) == 3);
    CHECK(chain.count_roots(Rational(0), Rational(3)) == 2);

    std::vector<RationalInterval> roots = isolate_real_roots(p, tiny(3));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].contains(Rational(-3)));
    CHECK(roots[1].contains(Rational(1)));
    CHECK(roots[2].contains(Rational(2)));
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
    for (const auto& r : roots) CHECK(r.width() <= tiny(3));
}

TEST_CASE("eigenvalue isolation: Hamming H(3,3) and the 7-cycle") {
    IntersectionArray h33 = parse_array("6,4,2;1,2,3");
    SpectralData sd = isolate_eigenvalues(h33, tiny(10));
    REQUIRE(sd.theta.size() == 4);
    CHECK(sd.theta[0].is_point());
    CHECK(sd.theta[0].lo == 6);
    CHECK(sd.theta[1].contains(Rational(3)));
    CHECK(sd.theta[2].contains(Rational(0)));
    CHECK(sd.theta[3].contains(Rational(-3)));
    for (int j = 1; j <= 3; ++j) CHECK(sd.theta[j].width() <= tiny(10));
    // descending and disjoint
    for (int j = 0; j < 3; ++j) CHECK(sd.theta[j].lo > sd.theta[j + 1].hi);

    // multiplicities 1, 6, 12, 8
    CHECK(sd.m[0].contains(Rational(1)));
    CHECK(sd.m[1].contains(Rational(6)));
    CHECK(sd.m[2].contains(Rational(12)));
    CHECK(sd.m[3].contains(Rational(8)));

    SpectralData c7 = isolate_eigenvalues(parse_array("2,1,1;1,1,1"), tiny(10));
    CHECK(c7.m[0].contains(Rational(1)));
    for (int j = 1; j <= 3; ++j) CHECK(c7.m[j].contains(Rational(2)));

    // u values at the valency column are exactly 1
    for (int i = 0; i <= 3; ++i) CHECK(sd.u_vals[i][0].contains(Rational(1)));
}

TEST_CASE("Krein parameters: structural identities and zero flags") {
    IntersectionArray h33 = parse_array("6,4,2;1,2,3");
    SpectralData sd = isolate_eigenvalues(h33, tiny(30));
    KreinTable kt = krein_parameters(sd, tiny(20));
    const int D = 3;

    for (int t = 0; t <= D; ++t) CHECK(kt.at(t, 0, t).contains(Rational(1)));
    for (int i = 0; i <= D; ++i)
        for (int j = 0; j <= D; ++j) {
            if (i == j)
                CHECK(kt.at(0, i, j).intersects(sd.m[i]));
            else
                CHECK(kt.flag(0, i, j) == ZeroFlag::NumericZero);
        }

    // H(3,3) is formally self-dual: q^3_{11} vanishes like p^3_{11}
    CHECK(kt.flag(3, 1, 1) == ZeroFlag::NumericZero);
    CHECK(kt.at(3, 1, 1).contains_zero());
    // ... while q^1_{11} = p^1_{11} = a_1 = 1 is certified nonzero
    CHECK(kt.flag(1, 1, 1) == ZeroFlag::CertNonzero);
    CHECK(kt.at(1, 1, 1).contains(Rational(1)));
}

TEST_CASE("Q-ordering search") {
    {
        OracleResult h33 = run_spectral_oracle(parse_array("6,4,2;1,2,3"), tiny(30));
        REQUIRE(h33.ordering.has_value());
        CHECK(*h33.ordering == std::vector<int>{0, 1, 2, 3});
    }
    {
        OracleResult c7 = run_spectral_oracle(parse_array("2,1,1;1,1,1"), tiny(30));
        CHECK(c7.ordering.has_value());
    }
    {
        // Coxeter graph: primitive but not Q-polynomial, no ordering exists
        OracleResult cox = run_spectral_oracle(parse_array("3,2,2,1;1,1,1,2"), tiny(30));
        CHECK_FALSE(cox.ordering.has_value());
    }
}

TEST_CASE("transition matrices invert each other") {
    for (const char* text : {"6,4,2;1,2,3", "12,6,2;1,4,9", "2,1,1;1,1,1"}) {
        CAPTURE(text);
        SpectralData sd = isolate_eigenvalues(parse_array(text), tiny(30));
        TransitionMatrices tm = build_transition_matrices(sd);
        CHECK(encloses_identity(tm.S * tm.S_inv));
        CHECK(encloses_identity(tm.S_inv * tm.S));
    }
}

TEST_CASE("determinant factorization through the spectral basis") {
    // det(G) = 0 case
    {
        IntersectionArray arr = parse_array("6,4,2;1,2,3");
        SpectralData sd = isolate_eigenvalues(arr, tiny(40));
        ParameterTable pt = compute_parameter_table(arr);
        TransitionMatrices tm = build_transition_matrices(sd);
        std::vector<IntervalMatrix> blocks = build_b_blocks(sd, pt);
        REQUIRE(blocks.size() == 3);
        CHECK(check_det_factorization(BigInt(0), arr.n, tm, blocks));
        CHECK(primitivity_witness(sd));
    }
    // det(G) != 0 case
    {
        IntersectionArray arr = parse_array("3,2,2,1;1,1,1,2");
        SpectralData sd = isolate_eigenvalues(arr, tiny(60));
        ParameterTable pt = compute_parameter_table(arr);
        TransitionMatrices tm = build_transition_matrices(sd);
        std::vector<IntervalMatrix> blocks = build_b_blocks(sd, pt);
        CHECK(check_det_factorization(BigInt("302914369773627663974400"), arr.n, tm, blocks));
    }
}

TEST_CASE("imprimitive 9-cycle: witness fails but the oracle still runs") {
    IntersectionArray c9 = parse_array("2,1,1,1;1,1,1,1");
    CHECK_FALSE(is_primitive(c9));
    // u_3(theta_3) = 1 exactly: the distance-3 graph of C_9 is disconnected,
    // so no refinement can ever exclude 1
    SpectralData sd = isolate_eigenvalues(c9, tiny(60));
    CHECK_FALSE(primitivity_witness(sd));
    CHECK(sd.u_vals[3][3].contains(Rational(1)));
    // the oracle does not demand the witness for imprimitive input
    OracleResult res = run_spectral_oracle(c9, tiny(30));
    CHECK(res.ordering.has_value());
}
