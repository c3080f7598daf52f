#pragma once

#include <cstdint>
#include <vector>

namespace qpoly {

// Dense square int64 matrix, row-major. Entry magnitudes in this project are
// bounded by the vertex count (<= ~500), so products and trace sums fit.
struct Mat64 {
    int n = 0;
    std::vector<std::int64_t> a;

    Mat64() = default;
    explicit Mat64(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0) {}

    std::int64_t& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    std::int64_t operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    bool operator==(const Mat64& o) const { return n == o.n && a == o.a; }
};

// Serial reference kernels, kept for testing the parallel versions.
Mat64 matmul_serial(const Mat64& x, const Mat64& y);
std::int64_t trace_inner_serial(const Mat64& x, const Mat64& y);  // tr(x^t y) = sum x.*y

// OpenMP kernels (fall back to the serial loop when built without OpenMP).
Mat64 matmul_omp(const Mat64& x, const Mat64& y);
std::int64_t trace_inner_omp(const Mat64& x, const Mat64& y);

inline Mat64 matmul(const Mat64& x, const Mat64& y) { return matmul_omp(x, y); }
inline std::int64_t trace_inner(const Mat64& x, const Mat64& y) { return trace_inner_omp(x, y); }

// Joint distance-distribution counts: given the all-pairs distance matrix,
// count[h][i][j] += 1 over all (x,y) with d(x,y)=h and a vertex z with
// d(x,z)=i, d(z,y)=j; returned per-pair tables are checked constant by the
// caller. Parallel over x with a serial reference.
std::vector<std::int64_t> triple_counts_serial(const std::vector<int>& dist, int n, int diam,
                                               int x, int y);

}  // namespace qpoly
