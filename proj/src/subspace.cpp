#include "liecomp/subspace.hpp"

#include "liecomp/error.hpp"
#include "liecomp/kernels.hpp"

#include <utility>

namespace liecomp {

Subspace::Subspace(NumberField field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace::Subspace(NumberField field, std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : field_(std::move(field)), ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::row_space(Matrix m) {
    const NumberField field = m.field();
    const std::size_t ambient = m.cols();
    auto ech = rref(std::move(m));
    Matrix basis(field, ech.rank(), ambient);
    for (std::size_t i = 0; i < ech.rank(); ++i)
        for (std::size_t j = 0; j < ambient; ++j)
            basis(i, j) = ech.matrix(i, j);
    return Subspace(field, ambient, std::move(basis), std::move(ech.pivots));
}

Subspace Subspace::span(const NumberField& field, std::size_t ambient_dim, std::span<const Vector> vectors) {
    return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::full(const NumberField& field, std::size_t ambient_dim) {
    return row_space(Matrix::identity(field, ambient_dim));
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

Vector Subspace::reduce(const Vector& v) const {
    if (v.size() != ambient_)
        throw AmbientMismatch();
    Vector r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const FieldElement f = r[pivots_[i]];
        if (f.is_zero())
            continue;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (!basis_(i, j).is_zero())
                r[j] -= f * basis_(i, j);
    }
    return r;
}

bool Subspace::member(const Vector& v) const { return liecomp::is_zero(reduce(v)); }

void Subspace::require_compatible(const Subspace& other) const {
    if (ambient_ != other.ambient_ || !(field_ == other.field_))
        throw AmbientMismatch();
}

bool Subspace::contains(const Subspace& other) const {
    require_compatible(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!member(other.basis_.row(i)))
            return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    require_compatible(other);
    return row_space(basis_.stacked(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    require_compatible(other);
    if (is_zero() || other.is_zero())
        return Subspace(field_, ambient_);
    // x A = y B  <=>  (x, y) in ker [A^T | -B^T]; the intersection is {x A}.
    const std::size_t a = dim(), b = other.dim();
    Matrix m(field_, ambient_, a + b);
    for (std::size_t j = 0; j < ambient_; ++j) {
        for (std::size_t i = 0; i < a; ++i)
            m(j, i) = basis_(i, j);
        for (std::size_t i = 0; i < b; ++i)
            m(j, a + i) = -other.basis_(i, j);
    }
    const Subspace ker = kernel(m);
    std::vector<Vector> vecs;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
        Vector v = zero_vector(field_, ambient_);
        for (std::size_t i = 0; i < a; ++i)
            axpy(v, ker.basis_(r, i), basis_.row(i));
        vecs.push_back(std::move(v));
    }
    return span(field_, ambient_, vecs);
}

Subspace kernel(const Matrix& m) {
    const NumberField field = m.field();
    const std::size_t cols = m.cols();
    const auto ech = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : ech.pivots)
        is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v = zero_vector(field, cols);
        v[f] = field.one();
        for (std::size_t r = 0; r < ech.rank(); ++r)
            v[ech.pivots[r]] = -ech.matrix(r, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(field, cols, vecs);
}

Subspace image(const Matrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim())
        throw AmbientMismatch();
    std::vector<Vector> vecs;
    for (const auto& b : s.basis_vectors())
        vecs.push_back(m.apply(b));
    return Subspace::span(m.field(), m.rows(), vecs);
}

Subspace restrict_subspace(const Subspace& s) {
    const NumberField& e = s.field();
    const std::size_t d = e.degree();
    std::vector<Vector> vecs;
    for (const auto& b : s.basis_vectors()) {
        FieldElement scale = e.one();
        for (std::size_t t = 0; t < d; ++t) {
            vecs.push_back(restrict_vector(scale * b));
            scale *= e.generator();
        }
    }
    return Subspace::span(NumberField::rationals(), s.ambient_dim() * d, vecs);
}

Subspace extend_subspace(const NumberField& field, const Subspace& rational) {
    std::vector<Vector> vecs;
    for (const auto& b : rational.basis_vectors()) {
        Vector v;
        v.reserve(b.size());
        for (const auto& x : b)
            v.push_back(field.from_rational(x[0]));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(field, rational.ambient_dim(), vecs);
}

} // namespace liecomp
