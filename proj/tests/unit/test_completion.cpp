#include "grid.hpp"

#include "liecomp/bounds.hpp"
#include "liecomp/error.hpp"
#include "liecomp/tensor.hpp"

#include <doctest.h>

using namespace liecomp;
using testing::elem;
using testing::qvec;

namespace {

NumberField Q() { return NumberField::rationals(); }

struct HSetup {
    NumberField e = testing::qsqrt2();
    LieAlgebra h = heisenberg(e);
    LieAlgebra hq = restrict_scalars(h);
};

} // namespace

TEST_SUITE("completion-engine") {

TEST_CASE("tensor products") {
    const TensorAlgebra t = tensor_product(Q(), heisenberg());
    CHECK(t.algebra == heisenberg());
    CHECK(t.one_tensor_L.dim() == 3);

    const NumberField e = testing::qsqrt2();
    const TensorAlgebra th = tensor_product(e, heisenberg());
    CHECK(th.algebra.dim() == 3);
    CHECK(restrict_scalars(th.algebra).dim() == 6);
    CHECK(th.one_tensor_L.dim() == 3);
    CHECK(th.algebra == heisenberg(e));

    const TensorAlgebra ta = tensor_product(e, abelian(2));
    CHECK(ta.algebra == abelian(2, e));
    CHECK_THROWS_AS(tensor_product(e, heisenberg(e)), FieldMismatch);
}

TEST_CASE("entanglement") {
    const NumberField e = testing::qsqrt2();
    const TensorAlgebra t = tensor_product(e, heisenberg());
    CHECK(is_entangled(t, Subspace(e, 3)).entangled);

    const Subspace ei = extend_subspace(e, center(heisenberg()));
    const EntanglementReport r = is_entangled(t, ei);
    CHECK_FALSE(r.entangled);
    REQUIRE(r.witness);
    CHECK(center(heisenberg()).member(*r.witness));
    CHECK(ei.member(one_tensor(t, *r.witness)));

    const Vector x[] = {as_constants(e, qvec({1, 0, 0}))};
    CHECK_THROWS_AS(is_entangled(t, Subspace::span(e, 3, x)), NotAnIdeal);

    HSetup s;
    const TwistedIdeal n = twisted_ideal(s.h, identity_twist(s.h));
    CHECK(is_entangled(n.tensor, n.N).entangled);
}

TEST_CASE("quotient completions") {
    HSetup s;
    const TensorAlgebra t = tensor_product(s.e, s.hq);
    const Completion zero = quotient_completion(t, Subspace(s.e, 6));
    CHECK(zero.K.dim() == 6);
    CHECK(zero.K == t.algebra);

    const Completion one = quotient_completion(tensor_product(s.e, abelian(1)), Subspace(s.e, 1));
    CHECK(one.K.dim() == 1);
    CHECK(restrict_scalars(one.K).dim() == 2);

    const Subspace ei = extend_subspace(s.e, center(s.hq));
    CHECK_THROWS_AS(quotient_completion(t, ei), NotEntangled);
}

TEST_CASE("twisted ideals") {
    HSetup s;
    const FieldAutomorphism id = FieldAutomorphism::identity(s.e);
    const FieldAutomorphism conj = testing::conjugation(s.e);
    const Matrix one = Matrix::identity(Q(), 6);

    CHECK(twisted_ideal(s.h, {Subspace(Q(), 6), one, id}).N.is_zero());
    CHECK(twisted_ideal(s.h, {Subspace::full(Q(), 6), one, id}).N.dim() == 3);

    const TwistedIdeal c = twisted_ideal(s.h, {Subspace::full(Q(), 6), one, conj});
    CHECK(c.N.dim() == 3);
    CHECK(conjugate_subspace(c.N, one, conj) == twisted_ideal(s.h, {Subspace::full(Q(), 6), one, id}).N);

    const Vector x[] = {qvec({1, 0, 0, 0, 0, 0})};
    CHECK_THROWS_AS(twisted_ideal(s.h, {Subspace::span(Q(), 6, x), one, id}), NotAnIdeal);
    CHECK_THROWS_AS(twisted_ideal(s.h, {Subspace::full(Q(), 6), Matrix(Q(), 6, 6), id}), NotAnAutomorphism);
}

TEST_CASE("twisted completions") {
    HSetup s;
    const FieldAutomorphism id = FieldAutomorphism::identity(s.e);
    const FieldAutomorphism conj = testing::conjugation(s.e);
    const Matrix one = Matrix::identity(Q(), 6);
    CHECK(twisted_completion(s.h, identity_twist(s.h)).K.dim() == 3);
    CHECK(twisted_completion(s.h, {Subspace(Q(), 6), one, id}).K.dim() == 6);

    const Subspace z = center(s.hq);
    const Completion k = twisted_completion(s.h, {z, one, conj});
    CHECK(k.K.dim() == 6 - twisted_ideal(s.h, {z, one, conj}).N.dim());
    CHECK(k.K.dim() == 5);
    CHECK(k.K.dim() == twisted_completion(s.h, {image(one, z), one, id}).K.dim());
}

TEST_CASE("scalar action") {
    HSetup s;
    const FieldAutomorphism conj = testing::conjugation(s.e);
    CHECK(verify_scalar_action(s.h, identity_twist(s.h)).ok);

    const Matrix cc = testing::coordinate_map(conj, 3);
    const TwistData tw{Subspace::full(Q(), 6), cc, conj};
    const ScalarActionReport r = verify_scalar_action(s.h, tw, 5);
    CHECK(r.ok);
    CHECK(r.surjective);
    CHECK(r.checks.size() == 18);
    for (const auto& c : r.checks)
        if (c.scalar.is_one())
            CHECK(c.lhs == c.rhs);

    // f^-1(sigma(sqrt2) f(e1)) = sqrt2 e1 in L_Q: coordinates (0, 1, 0, ...).
    const Vector e1 = unit_vector(Q(), 6, 0);
    const Vector moved = restrict_vector(conj(s.e.generator()) * extend_vector(s.e, cc.apply(e1)));
    CHECK((*inverse(cc)).apply(moved) == restrict_vector(s.e.generator() * extend_vector(s.e, e1)));

    const Completion k = twisted_completion(s.h, tw);
    CHECK(k.project(s.e.generator() * as_constants(s.e, e1)) == k.embed(unit_vector(Q(), 6, 1)));

    CHECK_THROWS_AS(verify_scalar_action(s.h, {center(s.hq), cc, conj}), NotAnIdeal);
}

TEST_CASE("preservation") {
    const NumberField e = testing::qsqrt2();
    const PreservationReport h = preservation_check(quotient_completion(tensor_product(e, heisenberg()), Subspace(e, 3)));
    CHECK(h.ok());
    CHECK(h.quotient_lower.class_or_length == 2u);
    CHECK(h.quotient_derived.class_or_length == 2u);

    const PreservationReport a = preservation_check(quotient_completion(tensor_product(e, abelian(3)), Subspace(e, 3)));
    CHECK(a.ok());
    CHECK(a.quotient_lower.class_or_length == 1u);

    const PreservationReport s = preservation_check(quotient_completion(tensor_product(e, sl2()), Subspace(e, 3)));
    CHECK(s.ok());
    CHECK_FALSE(s.source_lower.class_or_length);
    CHECK_FALSE(s.quotient_lower.class_or_length);
    CHECK_FALSE(s.quotient_derived.class_or_length);
}

TEST_CASE("prop1 construction") {
    const Prop1Result one = prop1_construct(1);
    CHECK(one.field.degree() == 1);
    CHECK(one.companion.rows() == 1);
    CHECK(one.one_dimensional);

    const Prop1Result two = prop1_construct(2);
    CHECK(two.companion == Matrix::from_rationals(Q(), {{0, 2}, {1, 0}}));
    CHECK(two.minpoly_vanishes);
    CHECK(two.one_dimensional);

    const Prop1Result three = prop1_construct(3);
    CHECK(evaluate(Polynomial{-2, 0, 0, 1}, three.companion) == Matrix(Q(), 3, 3));
    CHECK(three.one_dimensional);
    CHECK(three.vectors_checked == 20);

    CHECK_THROWS_AS(prop1_construct(2, Polynomial{-1, 0, 1}), NotIrreducible);
    CHECK_THROWS_AS(prop1_construct(2, Polynomial{-2, 0, 0, 1}), EncodingError);
}

TEST_CASE("degree bound") {
    const NumberField e = testing::qsqrt2();
    const DegreeBoundReport a = degree_bound(abelian(1, e));
    for (const auto d : a.basis_dims)
        CHECK(d == 2);
    CHECK(a.upper_bound == 2);

    const DegreeBoundReport h = degree_bound(heisenberg(e));
    for (const auto d : h.sample_dims) {
        CHECK((d == 4 || d == 6));
        CHECK(d >= 2);
    }
    CHECK(degree_bound(heisenberg()).upper_bound == 2);
}

TEST_CASE("potential dimension") {
    const PotentialReport h = potential_dim_check(3, 2);
    CHECK_FALSE(h.feasible);
    CHECK(h.explanation == "infeasible: 2 does not divide 3");

    const PotentialReport f = potential_dim_check(6, 3, 4);
    CHECK(f.feasible);
    CHECK(f.degree == 2u);
    CHECK(f.explanation == "feasible: d = 2 <= 4");

    const PotentialReport same = potential_dim_check(5, 5);
    CHECK(same.feasible);
    CHECK(same.degree == 1u);

    CHECK_FALSE(potential_dim_check(6, 1, 4).feasible);
}

TEST_CASE("property: twisted ideal invariants over a random twist grid") {
    Sampler rng(606);
    HSetup s;
    for (int trial = 0; trial < 8; ++trial) {
        const Matrix f = testing::random_heisenberg_automorphism(rng, s.e, trial % 2 == 1);
        REQUIRE(check_homomorphism({s.hq, s.hq, f}, HomomorphismMode::automorphism).ok);
        for (const auto& sigma : field_automorphisms(s.e)) {
            for (const auto& [iname, I] : testing::heisenberg_ideals(s.hq)) {
                CAPTURE(iname);
                const TwistedIdeal n = twisted_ideal(s.h, {I, f, sigma});
                const TwistedIdeal base = twisted_ideal(s.h, {image(f, I), Matrix::identity(Q(), 6), FieldAutomorphism::identity(s.e)});
                // (sigma (x) f)(N(I, f, sigma)) = N(f(I), 1, 1).
                CHECK(conjugate_subspace(n.N, f, sigma) == base.N);
                // N is the kernel of a surjection E (x) I -> f(I) over Q.
                CHECK(restrict_subspace(n.N).dim() == (s.e.degree() - 1) * I.dim());
                const Completion k = quotient_completion(n.tensor, n.N);
                CHECK(k.K.dim() == 6 - n.N.dim());
                CHECK(preservation_check(k).ok());
                CHECK_NOTHROW(degree_bound(k.K));
                if (I.dim() == 6)
                    CHECK(verify_scalar_action(s.h, {I, f, sigma}, static_cast<std::uint64_t>(trial)).ok);
            }
        }
    }
}

TEST_CASE("property: entangledness biconditional") {
    Sampler rng(607);
    for (const NumberField& e : {testing::qsqrt2(), testing::qcbrt2()}) {
        for (const LieAlgebra& l : {heisenberg(), n_plus(3), n_plus(4)}) {
            const TensorAlgebra t = tensor_product(e, l);
            for (int trial = 0; trial < 3; ++trial) {
                // An ideal closure of random generators, extended to E.
                const Subspace I = ideal_closure(l, {rng.nonzero_vector(Q(), l.dim(), 2)});
                const Subspace n = extend_subspace(e, I);
                const EntanglementReport r = is_entangled(t, n);
                CHECK_FALSE(r.entangled);
                REQUIRE(r.witness);
                CHECK(I.member(*r.witness));
                CHECK_THROWS_AS(quotient_completion(t, n), NotEntangled);
            }
            const LieAlgebra le = tensor_product(e, l).algebra;
            const TwistedIdeal n = twisted_ideal(le, identity_twist(le));
            CHECK(is_entangled(n.tensor, n.N).entangled);
            CHECK_NOTHROW(quotient_completion(n.tensor, n.N));
        }
    }
}

TEST_CASE("property: prop1 across degrees and seeds") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint64_t seed : {0u, 1u, 99u}) {
            const Prop1Result r = prop1_construct(n, std::nullopt, seed, 5);
            CHECK(r.minpoly_vanishes);
            CHECK(r.one_dimensional);
            CHECK(r.action.size() == n);
        }
    }
}

} // TEST_SUITE
