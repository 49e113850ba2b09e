// Serial reference kernels against their OpenMP versions. Each fixture
// first checks that both produce identical output.

#include "liecomp/kernels.hpp"
#include "liecomp/lie_algebra.hpp"
#include "liecomp/lie_library.hpp"
#include "liecomp/rng.hpp"

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <iostream>

using namespace liecomp;

namespace {

NumberField field_for(int64_t degree) {
    return degree == 1 ? NumberField::rationals() : NumberField(Polynomial{-2, 0, 1});
}

Matrix random_matrix(std::size_t n, const NumberField& f) {
    Sampler rng(n * 7919 + f.degree());
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
        rows.push_back(rng.vector(f, n, 9));
    return Matrix::from_rows(f, n, rows);
}

void require_same_rref(const Matrix& m) {
    const RowEchelon s = rref_serial(m), p = rref_parallel(m);
    if (!(s.matrix == p.matrix) || s.pivots != p.pivots) {
        std::cerr << "serial and parallel rref disagree\n";
        std::abort();
    }
}

template <RowEchelon (*Kernel)(Matrix)>
void bm_rref(benchmark::State& state) {
    const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), field_for(state.range(1)));
    require_same_rref(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(m));
}

// n_plus(k) restricted from Q(sqrt2): a larger nilpotent algebra with many
// nonzero structure constants.
LieAlgebra jacobi_input(std::size_t k) {
    return restrict_scalars(n_plus(k, NumberField(Polynomial{-2, 0, 1})));
}

template <std::optional<std::array<std::size_t, 3>> (*Kernel)(const LieAlgebra&)>
void bm_jacobi(benchmark::State& state) {
    const LieAlgebra l = jacobi_input(static_cast<std::size_t>(state.range(0)));
    if (jacobi_violation_serial(l) != jacobi_violation_parallel(l)) {
        std::cerr << "serial and parallel Jacobi scans disagree\n";
        std::abort();
    }
    state.counters["dim"] = static_cast<double>(l.dim());
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(l));
}

} // namespace

BENCHMARK(bm_rref<rref_serial>)->ArgsProduct({{16, 32, 64}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(bm_rref<rref_parallel>)->ArgsProduct({{16, 32, 64}, {1, 2}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bm_jacobi<jacobi_violation_serial>)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_jacobi<jacobi_violation_parallel>)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
