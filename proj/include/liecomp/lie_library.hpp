#pragma once

#include "liecomp/lie_algebra.hpp"

#include <cstddef>
#include <string>

namespace liecomp {

enum class AlgebraName { abelian, heisenberg, sl2, n_plus };

// abelian(n): all brackets zero.
// heisenberg: basis x, y, z with [x, y] = z.
// sl2: basis e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
// n_plus(n): strictly upper triangular n x n matrices, basis E_ij (i < j) in
// lexicographic order, of dimension n(n-1)/2.
// `n` is ignored for heisenberg and sl2.
LieAlgebra make_algebra(AlgebraName name, const NumberField& field, std::size_t n = 0);

LieAlgebra abelian(std::size_t n, const NumberField& field = NumberField::rationals());
LieAlgebra heisenberg(const NumberField& field = NumberField::rationals());
LieAlgebra sl2(const NumberField& field = NumberField::rationals());
LieAlgebra n_plus(std::size_t n, const NumberField& field = NumberField::rationals());

// Parses "abelian(3)", "heisenberg", "sl2", "n_plus(4)".
LieAlgebra make_algebra(const std::string& spec, const NumberField& field);

} // namespace liecomp
