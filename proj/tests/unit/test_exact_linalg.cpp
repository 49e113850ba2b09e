#include "support.hpp"

#include "liecomp/error.hpp"
#include "liecomp/kernels.hpp"
#include "liecomp/rng.hpp"
#include "liecomp/subspace.hpp"

#include <doctest.h>

using namespace liecomp;
using testing::elem;
using testing::qvec;

namespace {

NumberField Q() { return NumberField::rationals(); }

Matrix qmat(const std::vector<std::vector<Rational>>& rows) { return Matrix::from_rationals(Q(), rows); }

oracle::Rows rows_of(const Matrix& m) {
    oracle::Rows r(m.rows(), oracle::Row(m.cols() * m.field().degree()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t t = 0; t < m.field().degree(); ++t)
                r[i][j * m.field().degree() + t] = m(i, j)[t];
    return r;
}

Matrix random_matrix(Sampler& rng, const NumberField& f, std::size_t rows, std::size_t cols, long range = 3) {
    std::vector<Vector> r;
    for (std::size_t i = 0; i < rows; ++i)
        r.push_back(rng.vector(f, cols, range));
    return Matrix::from_rows(f, cols, r);
}

// Low-rank matrix: product of random rows x k and k x cols factors.
Matrix low_rank(Sampler& rng, std::size_t rows, std::size_t cols, std::size_t k) {
    return random_matrix(rng, Q(), rows, k) * random_matrix(rng, Q(), k, cols);
}

} // namespace

TEST_SUITE("exact-linalg") {

TEST_CASE("row reduction") {
    const RowEchelon z = rref(Matrix(Q(), 2, 2));
    CHECK(z.rank() == 0);
    CHECK(z.matrix == Matrix(Q(), 2, 2));

    const RowEchelon id = rref(Matrix::identity(Q(), 3));
    CHECK(id.rank() == 3);
    CHECK(id.matrix == Matrix::identity(Q(), 3));

    const Matrix m = qmat({{1, 2}, {2, 4}});
    const RowEchelon r = rref(m);
    CHECK(r.rank() == oracle::rank(rows_of(m)));
    CHECK(r.matrix == qmat({{1, 2}, {0, 0}}));
}

TEST_CASE("kernels") {
    CHECK(kernel(Matrix::identity(Q(), 3)).is_zero());
    CHECK(kernel(Matrix(Q(), 2, 3)).dim() == 3);
    const Subspace k = kernel(qmat({{1, 1, 0}}));
    CHECK(k.dim() == 2);
    const Vector a = qvec({1, -1, 0}), b = qvec({0, 0, 1});
    const Vector spanning[] = {a, b};
    CHECK(k == Subspace::span(Q(), 3, spanning));
}

TEST_CASE("sums and intersections") {
    const Subspace zero(Q(), 3);
    const Vector e1 = qvec({1, 0, 0}), e2 = qvec({0, 1, 0});
    const Vector ab[] = {e1, e2};
    const Subspace v = Subspace::span(Q(), 3, ab);
    CHECK(v.intersect(zero).is_zero());
    const Vector one[] = {e1}, two[] = {e2};
    CHECK(Subspace::span(Q(), 3, one).sum(Subspace::span(Q(), 3, two)).dim() == 2);

    const Vector cd[] = {qvec({1, 1, 0}), qvec({0, 0, 1})};
    const Subspace w = Subspace::span(Q(), 3, cd);
    const Vector expected[] = {qvec({1, 1, 0})};
    CHECK(v.intersect(w) == Subspace::span(Q(), 3, expected));
    CHECK_THROWS_AS(v.intersect(Subspace(Q(), 2)), AmbientMismatch);
}

TEST_CASE("restriction of scalars") {
    const NumberField e = testing::qsqrt2();
    CHECK(restrict_scalars(Matrix::identity(e, 1)) == Matrix::identity(Q(), 2));

    Matrix s(e, 1, 1);
    s(0, 0) = e.generator();
    CHECK(restrict_scalars(s) == qmat({{0, 2}, {1, 0}}));
    CHECK(multiplication_matrix(e.generator()) == qmat({{0, 2}, {1, 0}}));

    // Columns are the images of 1 and t under multiplication by 1 + t.
    Matrix u(e, 1, 1);
    u(0, 0) = elem(e, {1, 1});
    const FieldElement img1 = elem(e, {1, 1}) * e.one();
    const FieldElement imgt = elem(e, {1, 1}) * e.generator();
    const Matrix r = restrict_scalars(u);
    CHECK(r == qmat({{1, 2}, {1, 1}}));
    CHECK(r(0, 0)[0] == img1[0]);
    CHECK(r(1, 0)[0] == img1[1]);
    CHECK(r(0, 1)[0] == imgt[0]);
    CHECK(r(1, 1)[0] == imgt[1]);
}

TEST_CASE("solving") {
    const auto x = solve(Matrix::identity(Q(), 2), qvec({1, 2}));
    REQUIRE(x);
    CHECK(*x == qvec({1, 2}));

    const Matrix m = qmat({{1, 1}});
    const auto y = solve(m, qvec({3}));
    REQUIRE(y);
    CHECK(m.apply(*y) == qvec({3}));

    CHECK_FALSE(solve(qmat({{1}, {1}}), qvec({1, 2})));
}

TEST_CASE("property: rank-nullity and oracle rank") {
    Sampler rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 6));
        const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
        const std::size_t k = static_cast<std::size_t>(rng.integer(1, 4));
        const Matrix m = low_rank(rng, rows, cols, k);
        const std::size_t r = rank(m);
        CHECK(r == oracle::rank(rows_of(m)));
        CHECK(r + kernel(m).dim() == cols);
        for (const auto& v : kernel(m).basis_vectors())
            CHECK(is_zero(m.apply(v)));
    }
}

TEST_CASE("property: dim(A) + dim(B) = dim(A + B) + dim(A meet B)") {
    Sampler rng(5150);
    for (const NumberField& f : {NumberField::rationals(), testing::qsqrt2()}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = static_cast<std::size_t>(rng.integer(2, 6));
            std::vector<Vector> a, b;
            for (long i = rng.integer(0, 4); i > 0; --i)
                a.push_back(rng.vector(f, n, 1));
            for (long i = rng.integer(0, 4); i > 0; --i)
                b.push_back(rng.vector(f, n, 1));
            const Subspace A = Subspace::span(f, n, a), B = Subspace::span(f, n, b);
            const Subspace S = A.sum(B), I = A.intersect(B);
            CHECK(A.dim() + B.dim() == S.dim() + I.dim());
            CHECK(S.contains(A));
            CHECK(A.contains(I));
            CHECK(B.contains(I));
        }
    }
}

TEST_CASE("property: restriction of scalars is a functor") {
    Sampler rng(8);
    const NumberField e = testing::qcbrt2();
    for (int trial = 0; trial < 15; ++trial) {
        const Matrix a = random_matrix(rng, e, 2, 3), b = random_matrix(rng, e, 3, 2);
        CHECK(restrict_scalars(a * b) == restrict_scalars(a) * restrict_scalars(b));
        CHECK(restrict_scalars(Matrix::identity(e, 3)) == Matrix::identity(Q(), 9));
        const Vector v = rng.vector(e, 3);
        CHECK(restrict_vector(a.apply(v)) == restrict_scalars(a).apply(restrict_vector(v)));
        CHECK(extend_vector(e, restrict_vector(v)) == v);
    }
}

TEST_CASE("property: inverse and solve agree with substitution") {
    Sampler rng(77);
    const NumberField e = testing::qsqrt2();
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = random_matrix(rng, e, 3, 3);
        const auto inv = inverse(m);
        if (rank(m) == 3) {
            REQUIRE(inv);
            CHECK(*inv * m == Matrix::identity(e, 3));
        } else {
            CHECK_FALSE(inv);
        }
        const Vector rhs = m.apply(rng.vector(e, 3));
        const auto x = solve(m, rhs);
        REQUIRE(x);
        CHECK(m.apply(*x) == rhs);
    }
}

TEST_CASE("property: echelon form is canonical") {
    Sampler rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix m = low_rank(rng, 4, 5, 2);
        // Same row space through a different generating set.
        const Matrix mixed = random_matrix(rng, Q(), 4, 4) * m;
        if (rank(mixed) != rank(m))
            continue;
        CHECK(Subspace::row_space(m) == Subspace::row_space(mixed));
    }
}

TEST_CASE("property: serial and parallel row reduction agree") {
    Sampler rng(2025);
    for (const NumberField& f : {NumberField::rationals(), testing::qsqrt2()}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 12));
            const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 12));
            const Matrix m = random_matrix(rng, f, rows, cols, 2);
            const RowEchelon s = rref_serial(m), p = rref_parallel(m);
            CHECK(s.matrix == p.matrix);
            CHECK(s.pivots == p.pivots);
        }
    }
}

} // TEST_SUITE
