#include "liecomp/bounds.hpp"

#include "liecomp/error.hpp"
#include "liecomp/lie_structure.hpp"
#include "liecomp/rng.hpp"

#include <algorithm>

namespace liecomp {

Matrix evaluate(const Polynomial& q, const Matrix& m) {
    const NumberField& field = m.field();
    Matrix acc(field, m.rows(), m.cols());
    for (long i = q.degree(); i >= 0; --i) {
        acc = acc * m;
        for (std::size_t r = 0; r < m.rows(); ++r)
            acc(r, r) += field.from_rational(q.coeff(static_cast<std::size_t>(i)));
    }
    return acc;
}

Prop1Result prop1_construct(std::size_t n, const std::optional<Polynomial>& q, std::uint64_t seed,
                            std::size_t samples, std::size_t max_degree) {
    if (n == 0)
        throw EncodingError("n must be positive");
    Polynomial poly = q ? *q : Polynomial([n] {
        std::vector<Rational> c(n + 1);
        c[0] = -2;
        c[n] = 1;
        return c;
    }());
    if (poly.degree() != static_cast<long>(n))
        throw EncodingError("q must have degree " + std::to_string(n));
    if (!poly.is_monic())
        throw EncodingError("q must be monic");
    if (!check_irreducible(poly, max_degree))
        throw NotIrreducible(poly.str("t") + " is reducible over Q");

    const NumberField& rat = NumberField::rationals();
    Matrix m(rat, n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        m(i + 1, i) = rat.one();
    for (std::size_t i = 0; i < n; ++i)
        m(i, n - 1) = rat.from_rational(-poly.coeff(i));

    Prop1Result res{NumberField(poly, max_degree), m, {}};
    Matrix power = Matrix::identity(rat, n);
    for (std::size_t i = 0; i < n; ++i) {
        res.action.push_back(power);
        power = power * m;
    }
    res.minpoly_vanishes = evaluate(poly, m) == Matrix(rat, n, n);

    Sampler sampler(seed);
    res.one_dimensional = true;
    for (std::size_t s = 0; s < samples; ++s) {
        const Vector v = sampler.nonzero_vector(rat, n);
        std::vector<Vector> krylov;
        for (const auto& a : res.action)
            krylov.push_back(a.apply(v));
        ++res.vectors_checked;
        if (rank(Matrix::from_columns(rat, n, krylov)) != n)
            res.one_dimensional = false;
    }
    return res;
}

DegreeBoundReport degree_bound(const LieAlgebra& algebra, std::uint64_t seed, std::size_t samples) {
    const NumberField& field = algebra.field();
    const LieAlgebra lq = restrict_scalars(algebra);
    DegreeBoundReport rep;
    rep.degree = field.degree();
    const auto observe = [&](const Vector& x, std::vector<std::size_t>& into) {
        const std::size_t dim = centralizer(lq, x).dim();
        if (dim < rep.degree)
            throw LemmaViolation("dim_Q C(" + to_string(x) + ") = " + std::to_string(dim) + " < [E:Q] = " +
                                 std::to_string(rep.degree));
        into.push_back(dim);
    };
    for (std::size_t i = 0; i < lq.dim(); ++i)
        observe(lq.basis_vector(i), rep.basis_dims);
    Sampler sampler(seed);
    for (std::size_t s = 0; s < samples; ++s)
        observe(restrict_vector(sampler.nonzero_vector(field, algebra.dim())), rep.sample_dims);
    rep.upper_bound = lq.dim();
    for (const auto d : rep.basis_dims)
        rep.upper_bound = std::min(rep.upper_bound, d);
    for (const auto d : rep.sample_dims)
        rep.upper_bound = std::min(rep.upper_bound, d);
    return rep;
}

PotentialReport potential_dim_check(std::size_t n, std::size_t m, std::optional<std::size_t> bound) {
    if (n == 0 || m == 0)
        throw EncodingError("dimensions must be positive");
    PotentialReport rep;
    if (n % m != 0) {
        rep.explanation = "infeasible: " + std::to_string(m) + " does not divide " + std::to_string(n);
        return rep;
    }
    const std::size_t d = n / m;
    rep.degree = d;
    if (bound && d > *bound) {
        rep.explanation = "infeasible: degree " + std::to_string(d) + " exceeds centralizer bound " +
                          std::to_string(*bound);
        return rep;
    }
    rep.feasible = true;
    rep.explanation = "feasible: d = " + std::to_string(d);
    if (bound)
        rep.explanation += " <= " + std::to_string(*bound);
    return rep;
}

} // namespace liecomp
