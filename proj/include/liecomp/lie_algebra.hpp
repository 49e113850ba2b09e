#pragma once

#include "liecomp/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liecomp {

// One structure-constant entry: [e_i, e_j] = value, with i < j.
struct BracketEntry {
    std::size_t i, j;
    Vector value;
};

// Finite-dimensional Lie algebra over a number field, given by structure
// constants [e_i, e_j] = sum_k c_ij^k e_k.
class LieAlgebra {
public:
    // Entries need i < j; [e_j, e_i] is the negation and [e_i, e_i] = 0,
    // which makes the table alternating by construction. Unlisted pairs
    // bracket to zero.
    LieAlgebra(NumberField field, std::size_t dim, std::vector<BracketEntry> brackets,
               std::vector<std::string> basis_names = {});

    // Raw n*n table ([e_i,e_j] at i*n+j) taken verbatim, alternating or not.
    // Used to build deliberately broken structures for the checkers.
    static LieAlgebra from_full_table(NumberField field, std::size_t dim, std::vector<Vector> table,
                                      std::vector<std::string> basis_names = {});

    const NumberField& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    const Vector& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    Vector bracket(const Vector& u, const Vector& v) const;
    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim_, i); }
    Vector zero() const { return zero_vector(field_, dim_); }

    // Matrix of v -> [x, v].
    Matrix ad(const Vector& x) const;

    // Structure constants for i < j with a nonzero bracket.
    std::vector<BracketEntry> entries() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.field_ == b.field_ && a.table_ == b.table_;
    }

private:
    LieAlgebra(NumberField field, std::size_t dim, std::vector<Vector> table, std::vector<std::string> names, int);

    NumberField field_;
    std::size_t dim_;
    std::vector<Vector> table_;
    std::vector<std::string> names_;
};

struct ValidationResult {
    bool ok = true;
    std::size_t triples_checked = 0;
    std::optional<std::pair<std::size_t, std::size_t>> alternating_witness;
    std::optional<std::array<std::size_t, 3>> jacobi_witness;
};

// Alternating law on all basis pairs, then Jacobi on all C(n,3) triples.
ValidationResult validate(const LieAlgebra& algebra);

// Q-algebra of dimension n*d on the basis l^t e_i (index i*d + t).
LieAlgebra restrict_scalars(const LieAlgebra& algebra);

// The same structure constants read over a larger field (only for algebras
// over the canonical Q).
LieAlgebra extend_scalars(const LieAlgebra& algebra, const NumberField& field);

} // namespace liecomp
