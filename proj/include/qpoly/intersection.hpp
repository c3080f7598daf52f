#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpoly/numeric.hpp"

namespace qpoly {

// Intersection array {b_0..b_{D-1}; c_1..c_D} of a distance-regular graph,
// with the derived quantities a_i = k - b_i - c_i, valencies k_i, and the
// vertex count n = sum k_i. Conventions: c_0 = 0, b_D = 0, k = b_0.
struct IntersectionArray {
    int D = 0;
    std::vector<BigInt> b;  // indices 0..D, b[D] = 0
    std::vector<BigInt> c;  // indices 0..D, c[0] = 0
    std::vector<BigInt> a;  // indices 0..D
    std::vector<BigInt> k;  // valencies k_0..k_D
    BigInt n;               // |X|

    const BigInt& valency() const { return b[0]; }

    // Canonical text form "b0,...,b_{D-1};c1,...,cD".
    std::string text() const;
};

struct FeasibilityReport {
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> violations;

    void fail(const std::string& rule, const std::string& detail) {
        ok = false;
        violations.emplace_back(rule, detail);
    }
};

// Full table of intersection numbers p^h_{ij}, h,i,j in [0,D], exact integers.
struct ParameterTable {
    IntersectionArray arr;
    std::vector<BigInt> p;  // (D+1)^3, index (h,i,j)

    const BigInt& at(int h, int i, int j) const {
        const int m = arr.D + 1;
        return p[(h * m + i) * m + j];
    }
    BigInt& at(int h, int i, int j) {
        const int m = arr.D + 1;
        return p[(h * m + i) * m + j];
    }
};

// Parse "b0,...,b_{D-1};c1,...,cD" and validate.
// Throws ParseError, DiameterError, or FeasibilityError.
IntersectionArray parse_array(const std::string& text);

// Structural checks behind parse_array, usable on an already-built array.
FeasibilityReport validate_array(const IntersectionArray& arr);

// Compute the full p-table by the three-term recursion: seed rows i=0 and
// i=1, then ascend in i dividing by c_{i+1}. Any non-integer or negative
// intermediate aborts with FeasibilityError.
ParameterTable compute_parameter_table(const IntersectionArray& arr);

// Closed forms for p^h_{2j} (|j-h| <= 2) and p^h_{3j} (|j-h| <= 3).
// Out-of-window (h,j) returns 0; terms with out-of-range subscripts
// contribute 0 (their structural coefficient vanishes).
Rational closed_form_p2(const IntersectionArray& arr, int h, int j);
Rational closed_form_p3(const IntersectionArray& arr, int h, int j);

// Primitivity from the array: neither bipartite (all a_i = 0) nor antipodal
// (b_i = c_{D-i} for all i != floor(D/2)); valency-2 arrays (cycles) are
// primitive exactly when every distance graph is connected, i.e. n is odd
// and gcd(i, n) = 1 for all i <= D.
bool is_primitive(const IntersectionArray& arr);

}  // namespace qpoly
