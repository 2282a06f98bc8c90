// Times the OpenMP kernels against their serial counterparts and the naive
// reference, verifying that all paths produce identical results.

#include <cstdio>
#include <omp.h>

#include "hahn/linalg.hpp"
#include "hahn/reference.hpp"
#include "hahn/relation.hpp"
#include "hahn/selftest.hpp"

using namespace hahn;

namespace {

double time_once(const char* label, double baseline, auto&& fn) {
    double t0 = omp_get_wtime();
    fn();
    double dt = omp_get_wtime() - t0;
    if (baseline > 0)
        std::printf("  %-28s %8.3f ms   speedup %.2fx\n", label, dt * 1e3, baseline / dt);
    else
        std::printf("  %-28s %8.3f ms\n", label, dt * 1e3);
    return dt;
}

void bench_expansion(int series_count, unsigned degree) {
    testing::Rng rng(42);
    testing::SeriesOptions opt;
    opt.max_terms = 3;
    opt.allow_zero = false;
    std::vector<Series> ws;
    for (int i = 0; i < series_count; ++i) ws.push_back(testing::random_series(rng, opt));
    auto tuples = enumerate_monomials(ws.size(), degree);

    std::printf("monomial expansion: %d series, degree %u, %zu monomials\n", series_count,
                degree, tuples.size());
    std::vector<Series> serial, parallel;
    double base = time_once("serial", 0, [&] { serial = expand_monomials(ws, tuples, false); });
    time_once("openmp", base, [&] { parallel = expand_monomials(ws, tuples, true); });
    std::printf("  results identical: %s\n\n", serial == parallel ? "yes" : "NO");
}

void bench_rank(std::size_t n) {
    testing::Rng rng(43);
    Matrix m(n, std::vector<Rat>(n));
    for (auto& row : m)
        for (auto& x : row) x = testing::random_rational(rng, 9, 1);

    std::printf("rank/nullspace: %zux%zu rational matrix\n", n, n);
    RankNullspace serial, parallel, naive;
    double base = time_once("bareiss serial", 0, [&] { serial = rank_nullspace(m, n, false); });
    time_once("bareiss openmp", base, [&] { parallel = rank_nullspace(m, n, true); });
    time_once("gauss reference", base, [&] { naive = reference::gauss_rank_nullspace(m, n); });
    bool same = serial.rank == parallel.rank && serial.kernel == parallel.kernel &&
                serial.rank == naive.rank && serial.kernel == naive.kernel;
    std::printf("  results identical: %s\n\n", same ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
    int series_count = argc > 1 ? std::atoi(argv[1]) : 5;
    unsigned degree = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 5;
    std::size_t dim = argc > 3 ? static_cast<std::size_t>(std::atoi(argv[3])) : 64;

    std::printf("threads: %d\n\n", omp_get_max_threads());
    bench_expansion(series_count, degree);
    bench_rank(dim);
    return 0;
}
