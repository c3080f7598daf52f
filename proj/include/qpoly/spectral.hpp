#pragma once

#include <optional>
#include <vector>

#include "qpoly/intersection.hpp"
#include "qpoly/matrix.hpp"
#include "qpoly/numeric.hpp"
#include "qpoly/polynomials.hpp"

namespace qpoly {

// Certified spectral data of an intersection array: isolated eigenvalue
// intervals of the tridiagonal intersection matrix, polynomial values at
// them, and multiplicity enclosures.
struct SpectralData {
    IntersectionArray arr;
    PolySeq ps;
    std::vector<RationalInterval> theta;               // D+1 disjoint, descending; theta[0] = [k,k]
    std::vector<std::vector<RationalInterval>> u_vals; // u_vals[i][j] encloses u_i(theta_j)
    std::vector<std::vector<RationalInterval>> v_vals; // v_vals[i][j] encloses v_i(theta_j)
    std::vector<RationalInterval> m;                   // multiplicities m_0..m_D
};

// Tridiagonal intersection matrix B (diagonal a_i, super b_i, sub c_i).
RatMatrix intersection_matrix(const IntersectionArray& arr);

// Isolate the D+1 eigenvalues to intervals of width <= width each; theta_0
// is pinned to k exactly. Multiplicities via m_j = |X| / sum_i k_i u_i(theta_j)^2.
SpectralData isolate_eigenvalues(const IntersectionArray& arr, const Rational& width);

enum class ZeroFlag { CertNonzero, NumericZero };

struct KreinTable {
    int D = 0;
    std::vector<RationalInterval> q;  // (D+1)^3, index (h,i,j)
    std::vector<ZeroFlag> flags;
    Rational zero_width;  // width threshold under which a straddling interval is flagged zero

    const RationalInterval& at(int h, int i, int j) const {
        const int m = D + 1;
        return q[(h * m + i) * m + j];
    }
    ZeroFlag flag(int h, int i, int j) const {
        const int m = D + 1;
        return flags[(h * m + i) * m + j];
    }
};

// Krein parameters q^h_{ij} = m_i m_j / |X| * sum_l k_l u_l(theta_i) u_l(theta_j) u_l(theta_h)
// as intervals. An interval that straddles zero and is wider than zero_width
// means the spectral data is too coarse: PrecisionError.
KreinTable krein_parameters(const SpectralData& sd, const Rational& zero_width);

// Search for a Q-polynomial ordering: for each candidate t the chain demanded
// by the tridiagonal pattern of q^h_{t,.} is built greedily and then both the
// vanishing and nonvanishing conditions are verified in full.
std::optional<std::vector<int>> find_q_ordering(const KreinTable& kt);

struct TransitionMatrices {
    IntervalMatrix S;      // (D+1)x(D+1), S_ij = |X|^{-1} m_j u_i(theta_j)
    IntervalMatrix S_inv;  // (S^{-1})_ij = v_j(theta_i)
    IntervalMatrix S_alt;  // DxD, (S^alt)_ij = S_ij - S_0j  (indices 1..D)
};

TransitionMatrices build_transition_matrices(const SpectralData& sd);

// True when the product encloses the identity entry-wise.
bool encloses_identity(const IntervalMatrix& prod);

// The 4x4 blocks B_1..B_D: Gram matrices of
// {A_2 A_i^* A - A A_i^* A_2, A_3 A_i^* - A_i^* A_3, A_2 A_i^* - A_i^* A_2, A A_i^* - A_i^* A}
// evaluated through the triple-sum trace expansion with dual eigenvalue
// coefficients theta*_l = m_i u_l(theta_i).
std::vector<IntervalMatrix> build_b_blocks(const SpectralData& sd, const ParameterTable& pt);

// Check that (|X|^D det S^alt)^{-8} * prod det(B_i) encloses the exact
// det(G); the |X|^D factor is the per-family basis-change scale.
bool check_det_factorization(const BigInt& det_g, const BigInt& n, const TransitionMatrices& tm,
                             const std::vector<IntervalMatrix>& b_blocks);

// Primitivity witness: every u_i(theta_j) interval (1 <= i,j <= D) excludes 1.
bool primitivity_witness(const SpectralData& sd);

// Refinement driver: recompute spectral data at shrinking widths until the
// Krein table is decided at zero_width (and the witness holds for primitive
// input). Throws PrecisionError when the round budget runs out.
struct OracleResult {
    SpectralData sd;
    KreinTable kt;
    std::optional<std::vector<int>> ordering;
};

OracleResult run_spectral_oracle(const IntersectionArray& arr, const Rational& zero_width,
                                 int max_rounds = 8);

}  // namespace qpoly
