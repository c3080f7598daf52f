#include "qpoly/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpoly {

Mat64 matmul_serial(const Mat64& x, const Mat64& y) {
    const int n = x.n;
    Mat64 out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::int64_t v = x(i, k);
            if (v == 0) continue;
            const std::int64_t* yr = &y.a[static_cast<std::size_t>(k) * n];
            std::int64_t* outr = &out.a[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) outr[j] += v * yr[j];
        }
    return out;
}

std::int64_t trace_inner_serial(const Mat64& x, const Mat64& y) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < x.a.size(); ++i) acc += x.a[i] * y.a[i];
    return acc;
}

Mat64 matmul_omp(const Mat64& x, const Mat64& y) {
    const int n = x.n;
    Mat64 out(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const std::int64_t v = x(i, k);
            if (v == 0) continue;
            const std::int64_t* yr = &y.a[static_cast<std::size_t>(k) * n];
            std::int64_t* outr = &out.a[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) outr[j] += v * yr[j];
        }
    }
    return out;
}

std::int64_t trace_inner_omp(const Mat64& x, const Mat64& y) {
    std::int64_t acc = 0;
    const std::size_t sz = x.a.size();
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (std::size_t i = 0; i < sz; ++i) acc += x.a[i] * y.a[i];
    return acc;
}

std::vector<std::int64_t> triple_counts_serial(const std::vector<int>& dist, int n, int diam,
                                               int x, int y) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(diam + 1) * (diam + 1), 0);
    const int* dx = &dist[static_cast<std::size_t>(x) * n];
    const int* dy = &dist[static_cast<std::size_t>(y) * n];
    for (int z = 0; z < n; ++z) counts[static_cast<std::size_t>(dx[z]) * (diam + 1) + dy[z]] += 1;
    return counts;
}

}  // namespace qpoly
