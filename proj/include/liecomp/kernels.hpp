#pragma once

// Data-parallel kernels. Each has a plain serial version kept as the
// reference implementation; tests check that both produce identical output
// and bench/ measures the difference. Results never depend on scheduling:
// pivots and witnesses are chosen by index, not by completion order.

#include "liecomp/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace liecomp {

class LieAlgebra;

struct RowEchelon {
    Matrix matrix; // reduced row-echelon form, zero rows kept at the bottom
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

// Gauss-Jordan elimination; the pivot of each column is the first nonzero
// entry at or below the current row.
RowEchelon rref_serial(Matrix m);
// Same algorithm, the elimination of the non-pivot rows runs in parallel.
RowEchelon rref_parallel(Matrix m);
inline RowEchelon rref(Matrix m) { return rref_parallel(std::move(m)); }

// First basis triple (i < j < k, lexicographic) violating the Jacobi
// identity, if any.
std::optional<std::array<std::size_t, 3>> jacobi_violation_serial(const LieAlgebra& algebra);
std::optional<std::array<std::size_t, 3>> jacobi_violation_parallel(const LieAlgebra& algebra);

} // namespace liecomp
