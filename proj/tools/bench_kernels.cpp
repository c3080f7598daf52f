// Compares the OpenMP kernels against the serial reference on dense int64
// matrices of the sizes the brute-force graph oracle produces.

#include <chrono>
#include <cstdio>
#include <random>

#include "qpoly/kernels.hpp"

using namespace qpoly;
using Clock = std::chrono::steady_clock;

namespace {

Mat64 random_matrix(int n, std::mt19937& rng) {
    Mat64 m(n);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (auto& v : m.a) v = dist(rng);
    return m;
}

template <typename F>
double time_ms(F&& f, int reps) {
    auto t0 = Clock::now();
    for (int i = 0; i < reps; ++i) f();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    std::mt19937 rng(12345);
    for (int n : {64, 128, 256, 512}) {
        Mat64 x = random_matrix(n, rng);
        Mat64 y = random_matrix(n, rng);
        Mat64 ref = matmul_serial(x, y);
        Mat64 par = matmul_omp(x, y);
        if (!(ref == par)) {
            std::fprintf(stderr, "FAIL: matmul mismatch at n=%d\n", n);
            return 1;
        }
        if (trace_inner_serial(x, y) != trace_inner_omp(x, y)) {
            std::fprintf(stderr, "FAIL: trace mismatch at n=%d\n", n);
            return 1;
        }
        const int reps = n <= 128 ? 20 : 5;
        double ts = time_ms([&] { matmul_serial(x, y); }, reps);
        double tp = time_ms([&] { matmul_omp(x, y); }, reps);
        std::printf("matmul n=%4d  serial %8.2f ms  omp %8.2f ms  speedup %.2fx\n", n, ts, tp,
                    ts / tp);
    }
    return 0;
}
