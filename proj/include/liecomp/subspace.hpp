#pragma once

#include "liecomp/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace liecomp {

// Subspace of F^n stored as the nonzero rows of a reduced row-echelon basis,
// so two subspaces are equal exactly when their bases are equal.
class Subspace {
public:
    // The zero subspace.
    Subspace(NumberField field, std::size_t ambient_dim);

    static Subspace span(const NumberField& field, std::size_t ambient_dim, std::span<const Vector> vectors);
    static Subspace full(const NumberField& field, std::size_t ambient_dim);
    // Row space of m.
    static Subspace row_space(Matrix m);

    const NumberField& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return pivots_.size(); }
    bool is_zero() const { return pivots_.empty(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    // Coordinates not used as pivots, ascending.
    std::vector<std::size_t> non_pivots() const;

    // v minus its component along the echelon basis: pivot coordinates
    // become zero. Zero exactly when v is a member.
    Vector reduce(const Vector& v) const;
    bool member(const Vector& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(NumberField field, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);
    void require_compatible(const Subspace& other) const;

    NumberField field_;
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// {v : m v = 0}; dim = cols - rank.
Subspace kernel(const Matrix& m);
// Span of m b for b in s.
Subspace image(const Matrix& m, const Subspace& s);
// Q-span of l^t b over the basis b of an E-subspace.
Subspace restrict_subspace(const Subspace& s);
// E-span of a subspace of Q^n viewed inside E^n (entries read as constants).
Subspace extend_subspace(const NumberField& field, const Subspace& rational);

} // namespace liecomp
