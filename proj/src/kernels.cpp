#include "liecomp/kernels.hpp"

#include "liecomp/lie_algebra.hpp"

#include <omp.h>

#include <atomic>
#include <limits>

namespace liecomp {
namespace {

// Below this many entries the thread start-up costs more than it saves.
constexpr std::size_t kParallelThreshold = 256;

template <bool Parallel>
RowEchelon rref_impl(Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        m.swap_rows(p, r);
        const FieldElement inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero())
                m(r, j) *= inv;
        const auto eliminate = [&](std::size_t i) {
            if (i == r || m(i, c).is_zero())
                return;
            const FieldElement f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        };
        if constexpr (Parallel) {
            const auto n = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (rows * cols >= kParallelThreshold)
            for (long i = 0; i < n; ++i)
                eliminate(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = 0; i < rows; ++i)
                eliminate(i);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

bool jacobi_holds(const LieAlgebra& a, std::size_t i, std::size_t j, std::size_t k) {
    const Vector ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
    Vector sum = a.bracket(a.bracket_basis(i, j), ek);
    sum = sum + a.bracket(a.bracket_basis(j, k), ei);
    sum = sum + a.bracket(a.bracket_basis(k, i), ej);
    return is_zero(sum);
}

} // namespace

RowEchelon rref_serial(Matrix m) { return rref_impl<false>(std::move(m)); }
RowEchelon rref_parallel(Matrix m) { return rref_impl<true>(std::move(m)); }

std::optional<std::array<std::size_t, 3>> jacobi_violation_serial(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!jacobi_holds(algebra, i, j, k))
                    return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> jacobi_violation_parallel(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                triples.push_back({i, j, k});
    // Smallest failing index wins so the witness matches the serial scan.
    std::atomic<std::size_t> first{std::numeric_limits<std::size_t>::max()};
    const auto count = static_cast<long>(triples.size());
#pragma omp parallel for schedule(dynamic, 8) if (count >= 32)
    for (long t = 0; t < count; ++t) {
        const auto idx = static_cast<std::size_t>(t);
        if (idx >= first.load(std::memory_order_relaxed))
            continue;
        const auto& [i, j, k] = triples[idx];
        if (!jacobi_holds(algebra, i, j, k)) {
            std::size_t cur = first.load();
            while (idx < cur && !first.compare_exchange_weak(cur, idx)) {
            }
        }
    }
    if (first.load() == std::numeric_limits<std::size_t>::max())
        return std::nullopt;
    return triples[first.load()];
}

} // namespace liecomp
