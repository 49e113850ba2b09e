#include "liecomp/lie_structure.hpp"

#include "liecomp/error.hpp"
#include "liecomp/kernels.hpp"
#include "liecomp/rng.hpp"

namespace liecomp {

Subspace centralizer(const LieAlgebra& algebra, const Vector& x) { return kernel(algebra.ad(x)); }

Subspace center(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    Matrix stacked(algebra.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& c = algebra.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k)
                stacked(i * n + k, j) = c[k];
        }
    return kernel(stacked);
}

CentroidReport centroid(const LieAlgebra& algebra, std::uint64_t seed, std::size_t samples) {
    const NumberField& field = algebra.field();
    const std::size_t n = algebra.dim();
    // Unknown alpha(r, c) sits at column r*n + c. Row (i, j, k) is the k-th
    // coordinate of [alpha e_i, e_j] - alpha [e_i, e_j].
    Matrix system(field, n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& cij = algebra.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (std::size_t r = 0; r < n; ++r)
                    system(row, r * n + i) += algebra.bracket_basis(r, j)[k];
                for (std::size_t m = 0; m < n; ++m)
                    system(row, k * n + m) -= cij[m];
            }
        }
    const Subspace solutions = kernel(system);

    CentroidReport report;
    for (const auto& v : solutions.basis_vectors()) {
        Matrix a(field, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                a(r, c) = v[r * n + c];
        report.basis.push_back(std::move(a));
    }
    const auto flatten = [n](const Matrix& a) {
        Vector v;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                v.push_back(a(r, c));
        return v;
    };
    report.contains_identity = solutions.member(flatten(Matrix::identity(field, n)));
    report.closed_under_multiplication = true;
    report.commutative = true;
    for (const auto& a : report.basis)
        for (const auto& b : report.basis) {
            const Matrix ab = a * b;
            if (!solutions.member(flatten(ab)))
                report.closed_under_multiplication = false;
            if (!(ab == b * a))
                report.commutative = false;
        }
    report.every_nonzero_invertible = true;
    for (const auto& a : report.basis)
        if (!inverse(a))
            report.every_nonzero_invertible = false;
    Sampler sampler(seed);
    for (std::size_t s = 0; s < samples && report.every_nonzero_invertible && report.dim() > 1; ++s) {
        Matrix combo(field, n, n);
        for (const auto& a : report.basis)
            combo = combo + sampler.element(field) * a;
        bool zero = true;
        for (std::size_t r = 0; r < n && zero; ++r)
            zero = is_zero(combo.row(r));
        if (!zero && !inverse(combo))
            report.every_nonzero_invertible = false;
    }
    return report;
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
    std::vector<Vector> vecs;
    const auto av = a.basis_vectors();
    const auto bv = b.basis_vectors();
    for (const auto& x : av)
        for (const auto& y : bv)
            vecs.push_back(algebra.bracket(x, y));
    return Subspace::span(algebra.field(), algebra.dim(), vecs);
}

Subspace ideal_closure(const LieAlgebra& algebra, const std::vector<Vector>& gens) {
    const std::size_t n = algebra.dim();
    Subspace current = Subspace::span(algebra.field(), n, gens);
    for (std::size_t iter = 0; iter <= n; ++iter) {
        std::vector<Vector> vecs = current.basis_vectors();
        for (const auto& b : current.basis_vectors())
            for (std::size_t i = 0; i < n; ++i)
                vecs.push_back(algebra.bracket(algebra.basis_vector(i), b));
        Subspace next = Subspace::span(algebra.field(), n, vecs);
        if (next.dim() == current.dim())
            return current;
        current = std::move(next);
    }
    return current;
}

bool is_ideal(const LieAlgebra& algebra, const Subspace& s) {
    for (const auto& b : s.basis_vectors())
        for (std::size_t i = 0; i < algebra.dim(); ++i)
            if (!s.member(algebra.bracket(algebra.basis_vector(i), b)))
                return false;
    return true;
}

std::string to_string(SeriesKind kind) { return kind == SeriesKind::lower_central ? "lower_central" : "derived"; }

SeriesReport series(const LieAlgebra& algebra, SeriesKind kind) {
    SeriesReport rep{kind, {}, {}, false, std::nullopt};
    const Subspace whole = Subspace::full(algebra.field(), algebra.dim());
    rep.terms.push_back(whole);
    // Terms only shrink, so dim + 1 steps always reach zero or a repeat.
    for (std::size_t step = 0; step <= algebra.dim(); ++step) {
        const Subspace& last = rep.terms.back();
        if (last.is_zero()) {
            rep.terminated_at_zero = true;
            break;
        }
        Subspace next =
            kind == SeriesKind::lower_central ? bracket_span(algebra, whole, last) : bracket_span(algebra, last, last);
        const bool stalled = next == last;
        rep.terms.push_back(std::move(next));
        if (stalled)
            break;
    }
    for (const auto& t : rep.terms)
        rep.dims.push_back(t.dim());
    if (rep.terminated_at_zero) {
        // Lower central terms are numbered from 1, derived terms from 0; either
        // way the invariant is the number of nonzero terms past the first.
        const std::size_t zero_index = rep.terms.size() - 1;
        rep.class_or_length = zero_index;
    }
    return rep;
}

HomomorphismReport check_homomorphism(const LinearMap& phi, HomomorphismMode mode) {
    const auto& src = phi.source;
    const auto& dst = phi.target;
    if (!(src.field() == dst.field()) || !(phi.matrix.field() == src.field()))
        throw FieldMismatch();
    if (phi.matrix.rows() != dst.dim() || phi.matrix.cols() != src.dim())
        throw AmbientMismatch();
    HomomorphismReport rep;
    for (std::size_t i = 0; i < src.dim() && rep.ok; ++i)
        for (std::size_t j = i + 1; j < src.dim(); ++j) {
            const Vector lhs = phi.matrix.apply(src.bracket_basis(i, j));
            const Vector rhs = dst.bracket(phi.matrix.column(i), phi.matrix.column(j));
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.bracket_witness = {i, j};
                rep.failure = "bracket not preserved on (" + src.basis_names()[i] + ", " + src.basis_names()[j] + ")";
                break;
            }
        }
    if (!rep.ok || mode == HomomorphismMode::hom)
        return rep;
    const Subspace ker = kernel(phi.matrix);
    if (!ker.is_zero()) {
        rep.ok = false;
        rep.kernel_witness = ker.basis_vectors().front();
        rep.failure = "nonzero kernel";
        return rep;
    }
    if (mode == HomomorphismMode::automorphism) {
        if (!(src == dst)) {
            rep.ok = false;
            rep.failure = "source and target differ";
        } else if (phi.matrix.rows() != phi.matrix.cols()) {
            rep.ok = false;
            rep.failure = "not square";
        }
    }
    return rep;
}

} // namespace liecomp
