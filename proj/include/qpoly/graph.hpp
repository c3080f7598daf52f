#pragma once

#include <string>
#include <vector>

#include "qpoly/intersection.hpp"
#include "qpoly/kernels.hpp"
#include "qpoly/matrix.hpp"

namespace qpoly {

enum class GraphFamily { Hamming, Johnson, Cycle, FromEdgeList };

// Explicit small graph with symmetric 0/1 adjacency, used as a brute-force
// oracle for everything the parameter-level modules claim.
struct ExplicitGraph {
    GraphFamily family = GraphFamily::FromEdgeList;
    int n = 0;
    std::vector<std::vector<int>> adj;  // adjacency lists

    bool adjacent(int u, int v) const;
};

ExplicitGraph construct_hamming(int d, int q);
ExplicitGraph construct_johnson(int n, int k);
ExplicitGraph construct_cycle(int n);
// One "u v" pair per line, 0-indexed.
ExplicitGraph from_edge_list(const std::string& text);

// Vertex-level association-scheme data around a base vertex.
struct ExplicitScheme {
    int n = 0, D = 0;
    int base = 0;
    std::vector<int> dist;           // all-pairs distances, n x n
    std::vector<Mat64> A;            // distance matrices A_0..A_D
    std::vector<std::vector<int>> sphere;  // sphere[i] = vertices at distance i from base
    IntersectionArray arr;           // derived from counts

    int distance(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

// BFS distances, distance matrices, dual idempotent spheres; verifies
// distance-regularity by checking the triple counts constant over all pairs
// (NotDistanceRegularError otherwise) and derives the intersection array.
ExplicitScheme extract_scheme(const ExplicitGraph& g, int base = 0);

// Counted intersection numbers |Gamma_i(x) cap Gamma_j(y)| (any pair at
// distance h; constancy was verified during extraction).
BigInt counted_p(const ExplicitScheme& s, int h, int i, int j);

// Brute-force Gram matrix of the 4D matrices
//   A_2 E_i^* A - A E_i^* A_2, A_3 E_i^* - E_i^* A_3,
//   A_2 E_i^* - E_i^* A_2,     A E_i^* - E_i^* A       (i = 1..D)
// via trace inner products, in the canonical (W,X,Y,Z) layout.
IntMatrix brute_force_gram(const ExplicitScheme& s);

// True iff every distance-i graph is connected (union-find).
bool check_primitivity_explicit(const ExplicitScheme& s);

// Check v_i(A) = A_i for 0 <= i <= D and v_{D+1}(A) = 0, by running the
// three-term recurrence on the distance matrices with exact division.
bool check_poly_distance_identity(const ExplicitScheme& s);

}  // namespace qpoly
