#include "liecomp/lie_algebra.hpp"

#include "liecomp/error.hpp"
#include "liecomp/kernels.hpp"

#include <utility>

namespace liecomp {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i)
            names.push_back("e" + std::to_string(i + 1));
    if (names.size() != n)
        throw EncodingError("basis_names has " + std::to_string(names.size()) + " labels for dimension " +
                            std::to_string(n));
    return names;
}

} // namespace

LieAlgebra::LieAlgebra(NumberField field, std::size_t dim, std::vector<Vector> table, std::vector<std::string> names,
                       int)
    : field_(std::move(field)), dim_(dim), table_(std::move(table)), names_(default_names(dim, std::move(names))) {}

LieAlgebra::LieAlgebra(NumberField field, std::size_t dim, std::vector<BracketEntry> brackets,
                       std::vector<std::string> basis_names)
    : field_(std::move(field)), dim_(dim), names_(default_names(dim, std::move(basis_names))) {
    if (dim_ == 0)
        throw EncodingError("Lie algebra dimension must be positive");
    table_.assign(dim_ * dim_, zero_vector(field_, dim_));
    std::vector<bool> seen(dim_ * dim_, false);
    for (auto& e : brackets) {
        if (e.i >= e.j)
            throw EncodingError("bracket entry needs i < j, got i=" + std::to_string(e.i) +
                                " j=" + std::to_string(e.j));
        if (e.j >= dim_)
            throw EncodingError("bracket index " + std::to_string(e.j) + " out of range");
        if (e.value.size() != dim_)
            throw EncodingError("bracket value has wrong length");
        for (const auto& x : e.value)
            if (!(x.field() == field_))
                throw FieldMismatch();
        if (seen[e.i * dim_ + e.j])
            throw EncodingError("duplicate bracket entry");
        seen[e.i * dim_ + e.j] = true;
        table_[e.j * dim_ + e.i] = -e.value;
        table_[e.i * dim_ + e.j] = std::move(e.value);
    }
}

LieAlgebra LieAlgebra::from_full_table(NumberField field, std::size_t dim, std::vector<Vector> table,
                                       std::vector<std::string> basis_names) {
    if (table.size() != dim * dim)
        throw EncodingError("full bracket table needs dim^2 entries");
    for (const auto& v : table)
        if (v.size() != dim)
            throw EncodingError("bracket value has wrong length");
    return LieAlgebra(std::move(field), dim, std::move(table), std::move(basis_names), 0);
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw AmbientMismatch();
    Vector out = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (v[j].is_zero())
                continue;
            const Vector& c = table_[i * dim_ + j];
            if (is_zero(c))
                continue;
            axpy(out, u[i] * v[j], c);
        }
    }
    return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vector col = bracket(x, basis_vector(j));
        for (std::size_t i = 0; i < dim_; ++i)
            m(i, j) = col[i];
    }
    return m;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
    std::vector<BracketEntry> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (!is_zero(bracket_basis(i, j)))
                out.push_back({i, j, bracket_basis(i, j)});
    return out;
}

ValidationResult validate(const LieAlgebra& algebra) {
    ValidationResult res;
    const std::size_t n = algebra.dim();
    for (std::size_t i = 0; i < n && res.ok; ++i) {
        if (!is_zero(algebra.bracket_basis(i, i))) {
            res.ok = false;
            res.alternating_witness = {i, i};
            break;
        }
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero(algebra.bracket_basis(i, j) + algebra.bracket_basis(j, i))) {
                res.ok = false;
                res.alternating_witness = {i, j};
                break;
            }
    }
    if (!res.ok)
        return res;
    res.triples_checked = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    res.jacobi_witness = jacobi_violation_parallel(algebra);
    res.ok = !res.jacobi_witness.has_value();
    return res;
}

LieAlgebra restrict_scalars(const LieAlgebra& algebra) {
    const NumberField& e = algebra.field();
    const NumberField q = NumberField::rationals();
    const std::size_t n = algebra.dim();
    const std::size_t d = e.degree();
    std::vector<FieldElement> powers{e.one()};
    for (std::size_t t = 1; t < d; ++t)
        powers.push_back(powers.back() * e.generator());
    // [l^s e_i, l^t e_j] = l^(s+t) [e_i, e_j]
    std::vector<Vector> table(n * d * n * d, zero_vector(q, n * d));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& c = algebra.bracket_basis(i, j);
            if (is_zero(c))
                continue;
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < d; ++t)
                    table[(i * d + s) * n * d + (j * d + t)] = restrict_vector((powers[s] * powers[t]) * c);
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < d; ++t)
            names.push_back(t == 0 ? algebra.basis_names()[i]
                                   : "t" + (t > 1 ? "^" + std::to_string(t) : std::string()) + "*" +
                                         algebra.basis_names()[i]);
    return LieAlgebra::from_full_table(q, n * d, std::move(table), std::move(names));
}

LieAlgebra extend_scalars(const LieAlgebra& algebra, const NumberField& field) {
    if (!algebra.field().is_rationals())
        throw FieldMismatch();
    std::vector<BracketEntry> entries;
    for (auto& e : algebra.entries()) {
        Vector v;
        for (const auto& x : e.value)
            v.push_back(field.from_rational(x[0]));
        entries.push_back({e.i, e.j, std::move(v)});
    }
    return LieAlgebra(field, algebra.dim(), std::move(entries), algebra.basis_names());
}

} // namespace liecomp
