#include "qpoly/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {

constexpr int kMaxVertices = 520;  // desk-scale oracle; trace work is cubic

void check_size(long long n) {
    if (n < 1 || n > kMaxVertices)
        throw UnsupportedError("graph size " + std::to_string(n) + " outside supported range");
}

}  // namespace

bool ExplicitGraph::adjacent(int u, int v) const {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

ExplicitGraph construct_hamming(int d, int q) {
    if (d < 1 || q < 2) throw UnsupportedError("Hamming(d,q) needs d >= 1, q >= 2");
    long long n = 1;
    for (int i = 0; i < d; ++i) n *= q;
    check_size(n);
    ExplicitGraph g;
    g.family = GraphFamily::Hamming;
    g.n = static_cast<int>(n);
    g.adj.resize(g.n);
    // Vertices are base-q words; adjacency = Hamming distance 1.
    for (int v = 0; v < g.n; ++v) {
        int pow = 1;
        for (int pos = 0; pos < d; ++pos, pow *= q) {
            int digit = (v / pow) % q;
            for (int nd = 0; nd < q; ++nd) {
                if (nd == digit) continue;
                g.adj[v].push_back(v + (nd - digit) * pow);
            }
        }
    }
    return g;
}

ExplicitGraph construct_johnson(int n, int k) {
    if (k < 1 || n < k + 1) throw UnsupportedError("Johnson(n,k) needs 1 <= k < n");
    // Vertices: k-subsets of an n-set; adjacent when |intersection| = k-1.
    std::vector<unsigned> subsets;
    for (unsigned s = 0; s < (1u << n); ++s)
        if (__builtin_popcount(s) == k) subsets.push_back(s);
    check_size(static_cast<long long>(subsets.size()));
    ExplicitGraph g;
    g.family = GraphFamily::Johnson;
    g.n = static_cast<int>(subsets.size());
    g.adj.resize(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (__builtin_popcount(subsets[u] & subsets[v]) == k - 1) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
    return g;
}

ExplicitGraph construct_cycle(int n) {
    if (n < 3) throw UnsupportedError("cycle needs n >= 3");
    check_size(n);
    ExplicitGraph g;
    g.family = GraphFamily::Cycle;
    g.n = n;
    g.adj.resize(n);
    for (int v = 0; v < n; ++v) {
        g.adj[v].push_back((v + 1) % n);
        g.adj[v].push_back((v + n - 1) % n);
    }
    return g;
}

ExplicitGraph from_edge_list(const std::string& text) {
    ExplicitGraph g;
    g.family = GraphFamily::FromEdgeList;
    std::istringstream ss(text);
    std::vector<std::pair<int, int>> edges;
    int u, v, maxv = -1;
    while (ss >> u >> v) {
        if (u < 0 || v < 0 || u == v) throw ParseError("bad edge in edge list");
        edges.emplace_back(u, v);
        maxv = std::max(maxv, std::max(u, v));
    }
    if (edges.empty()) throw ParseError("empty edge list");
    check_size(maxv + 1);
    g.n = maxv + 1;
    g.adj.resize(g.n);
    for (auto [a, b] : edges) {
        if (!g.adjacent(a, b)) {
            g.adj[a].push_back(b);
            g.adj[b].push_back(a);
        }
    }
    return g;
}

namespace {

std::vector<int> bfs(const ExplicitGraph& g, int src) {
    std::vector<int> d(g.n, -1);
    std::queue<int> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.adj[x])
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push(y);
            }
    }
    return d;
}

}  // namespace

ExplicitScheme extract_scheme(const ExplicitGraph& g, int base) {
    ExplicitScheme s;
    s.n = g.n;
    s.base = base;
    s.dist.assign(static_cast<std::size_t>(g.n) * g.n, -1);
    int diam = 0;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> d = bfs(g, v);
        for (int u = 0; u < g.n; ++u) {
            if (d[u] < 0) throw NotDistanceRegularError("graph is not connected");
            s.dist[static_cast<std::size_t>(v) * g.n + u] = d[u];
            diam = std::max(diam, d[u]);
        }
    }
    s.D = diam;
    const int m = diam + 1;

    // Verify distance-regularity: the joint distance distribution of every
    // pair must depend only on the pair's distance.
    std::vector<std::vector<std::int64_t>> ref(m);
    std::vector<bool> seen(m, false);
    bool regular = true;
#pragma omp parallel for schedule(dynamic)
    for (int x = 0; x < g.n; ++x) {
        for (int y = 0; y < g.n; ++y) {
            int h = s.distance(x, y);
            std::vector<std::int64_t> counts = triple_counts_serial(s.dist, g.n, diam, x, y);
#pragma omp critical
            {
                if (!seen[h]) {
                    ref[h] = counts;
                    seen[h] = true;
                } else if (ref[h] != counts) {
                    regular = false;
                }
            }
        }
    }
    if (!regular)
        throw NotDistanceRegularError("intersection counts are not constant over pairs");

    // Distance matrices and spheres around the base vertex.
    s.A.assign(m, Mat64(g.n));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) s.A[s.distance(x, y)](x, y) = 1;
    s.sphere.assign(m, {});
    for (int y = 0; y < g.n; ++y) s.sphere[s.distance(base, y)].push_back(y);

    // Derived intersection array from the counted parameters.
    s.arr.D = diam;
    s.arr.b.assign(m, BigInt(0));
    s.arr.c.assign(m, BigInt(0));
    s.arr.a.assign(m, BigInt(0));
    s.arr.k.assign(m, BigInt(0));
    for (int i = 0; i <= diam; ++i) {
        if (i < diam) s.arr.b[i] = ref[i][static_cast<std::size_t>(1) * m + (i + 1)];
        if (i >= 1) s.arr.c[i] = ref[i][static_cast<std::size_t>(1) * m + (i - 1)];
        s.arr.a[i] = ref[i][static_cast<std::size_t>(1) * m + i];
        s.arr.k[i] = ref[0][static_cast<std::size_t>(i) * m + i];
    }
    s.arr.n = g.n;
    return s;
}

BigInt counted_p(const ExplicitScheme& s, int h, int i, int j) {
    const int m = s.D + 1;
    // Find any pair at distance h.
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            if (s.distance(x, y) == h) {
                auto counts = triple_counts_serial(s.dist, s.n, s.D, x, y);
                return BigInt(static_cast<long>(counts[static_cast<std::size_t>(i) * m + j]));
            }
    return BigInt(0);
}

namespace {

// A_a * E_i^* * A_b where A_0 = I; diagonal masks avoid two matmuls.
Mat64 sandwich(const ExplicitScheme& s, int a, int i, int b) {
    const int n = s.n;
    if (a == 0 && b == 0) {
        Mat64 out(n);
        for (int v : s.sphere[i]) out(v, v) = 1;
        return out;
    }
    if (a == 0) {  // E* A_b: rows masked
        Mat64 out(n);
        for (int v : s.sphere[i])
            for (int y = 0; y < n; ++y) out(v, y) = s.A[b](v, y);
        return out;
    }
    if (b == 0) {  // A_a E*: columns masked
        Mat64 out(n);
        for (int x = 0; x < n; ++x)
            for (int v : s.sphere[i]) out(x, v) = s.A[a](x, v);
        return out;
    }
    // A_a E* A_b: mask rows of A_b, multiply.
    Mat64 masked(n);
    for (int v : s.sphere[i])
        for (int y = 0; y < n; ++y) masked(v, y) = s.A[b](v, y);
    return matmul(s.A[a], masked);
}

Mat64 sub(const Mat64& x, const Mat64& y) {
    Mat64 out(x.n);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
    return out;
}

}  // namespace

IntMatrix brute_force_gram(const ExplicitScheme& s) {
    const int D = s.D;
    if (D < 3) throw DiameterError("brute-force Gram needs D >= 3");
    struct Fam { int a, b, a2, b2; };  // A_a E* A_b - A_a2 E* A_b2
    const Fam fams[4] = {
        {2, 1, 1, 2},  // W
        {3, 0, 0, 3},  // X
        {2, 0, 0, 2},  // Y
        {1, 0, 0, 1},  // Z
    };
    std::vector<Mat64> mats;
    mats.reserve(4 * D);
    for (const Fam& f : fams)
        for (int i = 1; i <= D; ++i)
            mats.push_back(sub(sandwich(s, f.a, i, f.b), sandwich(s, f.a2, i, f.b2)));

    const int sz = 4 * D;
    IntMatrix g(sz, sz, BigInt(0));
    // All matrices here are real, so <R,S> = tr(R^t S) = sum of entrywise products.
    for (int r = 0; r < sz; ++r)
        for (int c = r; c < sz; ++c) {
            BigInt v(static_cast<long>(trace_inner(mats[r], mats[c])));
            g(r, c) = v;
            g(c, r) = v;
        }
    return g;
}

bool check_primitivity_explicit(const ExplicitScheme& s) {
    for (int i = 1; i <= s.D; ++i) {
        // Union-find over the distance-i graph.
        std::vector<int> parent(s.n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int x = 0; x < s.n; ++x)
            for (int y = x + 1; y < s.n; ++y)
                if (s.distance(x, y) == i) parent[find(x)] = find(y);
        int root = find(0);
        for (int v = 1; v < s.n; ++v)
            if (find(v) != root) return false;
    }
    return true;
}

bool check_poly_distance_identity(const ExplicitScheme& s) {
    const int D = s.D;
    const IntersectionArray& arr = s.arr;
    // V_{i+1} = (A*V_i - a_i V_i - b_{i-1} V_{i-1}) / c_{i+1}, c_{D+1} := 1;
    // each V_i must equal A_i exactly (divisions must be exact).
    Mat64 vprev(s.n);  // V_{-1} := 0
    Mat64 vcur(s.n);
    for (int v = 0; v < s.n; ++v) vcur(v, v) = 1;  // V_0 = I
    if (!(vcur == s.A[0])) return false;
    for (int i = 0; i <= D; ++i) {
        const std::int64_t ai = arr.a[i].get_si();
        const std::int64_t bim1 = (i >= 1) ? arr.b[i - 1].get_si() : 0;
        const std::int64_t ci1 = (i + 1 <= D) ? arr.c[i + 1].get_si() : 1;
        Mat64 t = matmul(s.A[1], vcur);
        for (std::size_t w = 0; w < t.a.size(); ++w) {
            std::int64_t num = t.a[w] - ai * vcur.a[w] - bim1 * vprev.a[w];
            if (num % ci1 != 0) return false;
            t.a[w] = num / ci1;
        }
        if (i + 1 <= D) {
            if (!(t == s.A[i + 1])) return false;
        } else {
            for (std::int64_t e : t.a)
                if (e != 0) return false;  // v_{D+1}(A) = 0
        }
        vprev = vcur;
        vcur = t;
    }
    return true;
}

}  // namespace qpoly
