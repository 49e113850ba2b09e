#include "support.hpp"

#include "liecomp/error.hpp"
#include "liecomp/rng.hpp"

#include <doctest.h>

using namespace liecomp;
using testing::elem;

TEST_SUITE("exact-arith") {

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == -4);
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("arithmetic in Q(sqrt2)") {
    const NumberField e = testing::qsqrt2();
    const FieldElement s = e.generator();
    CHECK(s * s == elem(e, {2}));
    CHECK(elem(e, {1, 1}) + elem(e, {1, -1}) == elem(e, {2}));
    CHECK(nf_arith(elem(e, {1, 1}), elem(e, {1, -1}), FieldOp::add) == elem(e, {2}));

    // Oracle: schoolbook product reduced by t^2 - 2.
    const oracle::Row want = oracle::polymul_mod({1, 1}, {3, 1}, {-2, 0, 1});
    const FieldElement got = elem(e, {1, 1}) * elem(e, {3, 1});
    CHECK(got.coeffs() == want);
    CHECK(got == elem(e, {5, 4}));
    CHECK(got.str() == "5 + 4*t");
}

TEST_CASE("inverses") {
    const NumberField e = testing::qsqrt2();
    CHECK(e.one().inverse() == e.one());
    CHECK(e.generator().inverse() == e.element({0, Rational(1, 2)}));

    // Oracle: (1 + t)(a + b t) = 1 as a 2x2 system in a, b.
    const oracle::Row ab = oracle::solve_square({{1, 2}, {1, 1}}, {1, 0});
    const FieldElement inv = nf_inverse(elem(e, {1, 1}));
    CHECK(inv.coeffs() == ab);
    CHECK(inv == elem(e, {-1, 1}));
    CHECK_THROWS_AS(e.zero().inverse(), DivisionByZero);
}

TEST_CASE("mixed fields are rejected") {
    const NumberField a = testing::qsqrt2();
    const NumberField b = testing::qcbrt2();
    CHECK_THROWS_AS(a.one() + b.one(), FieldMismatch);
    // Fields are equal by minimal polynomial, not by object identity.
    CHECK(testing::qsqrt2().one() + a.one() == elem(a, {2}));
}

TEST_CASE("irreducibility") {
    CHECK(check_irreducible(Polynomial{-2, 0, 1}));
    CHECK_FALSE(check_irreducible(Polynomial{-1, 0, 1}));
    // No rational root among +-1, and a cubic without roots is irreducible.
    const Polynomial p{-1, -1, 0, 1};
    CHECK(p(1) != 0);
    CHECK(p(-1) != 0);
    CHECK(check_irreducible(p));
    // (t^2 + 1)(t^2 + 2): no rational root but reducible.
    CHECK_FALSE(check_irreducible(Polynomial{2, 0, 3, 0, 1}));
    CHECK(check_irreducible(Polynomial{1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(check_irreducible(Polynomial{-2, 0, 0, 0, 0, 0, 0, 0, 0, 1}), DegreeTooLarge);
    CHECK_THROWS_AS(NumberField(Polynomial{-1, 0, 1}), NotIrreducible);
}

TEST_CASE("field automorphisms") {
    const auto q = field_automorphisms(NumberField::rationals());
    REQUIRE(q.size() == 1);
    CHECK(q[0].is_identity());

    const NumberField e = testing::qsqrt2();
    const auto a = field_automorphisms(e);
    REQUIRE(a.size() == 2);
    CHECK(a[0].is_identity());
    CHECK(a[1].image_of_generator() == elem(e, {0, -1}));
    // Both images really are roots of t^2 - 2.
    for (const auto& s : a)
        CHECK(evaluate(e.minpoly(), s.image_of_generator()).is_zero());

    const NumberField c = testing::qcbrt2();
    const auto ac = field_automorphisms(c);
    REQUIRE(ac.size() == 1);
    CHECK(ac[0].is_identity());
}

TEST_CASE("applying automorphisms") {
    const NumberField e = testing::qsqrt2();
    const FieldAutomorphism id = FieldAutomorphism::identity(e);
    const FieldAutomorphism conj(e, elem(e, {0, -1}));
    CHECK(apply_automorphism(id, elem(e, {1, 1})) == elem(e, {1, 1}));
    CHECK(conj(elem(e, {1, 1})) == elem(e, {1, -1}));
    const FieldElement prod = elem(e, {1, 1}) * elem(e, {3, 1});
    CHECK(conj(prod) == elem(e, {5, -4}));
    CHECK(conj(prod) == conj(elem(e, {1, 1})) * conj(elem(e, {3, 1})));
    CHECK_THROWS_AS(FieldAutomorphism(e, elem(e, {1, 0})), Error);
}

TEST_CASE("property: a * a^-1 = 1 and (a^-1)^-1 = a") {
    Sampler rng(20240611);
    for (const NumberField& f : {testing::qsqrt2(), testing::qcbrt2(), NumberField(Polynomial{1, 1, 1, 1, 1})}) {
        for (int trial = 0; trial < 40; ++trial) {
            const FieldElement a = rng.nonzero_element(f, 9);
            CHECK(a * a.inverse() == f.one());
            CHECK(a.inverse().inverse() == a);
        }
    }
}

TEST_CASE("property: field axioms on random triples") {
    Sampler rng(7);
    const NumberField f = NumberField(Polynomial{-1, -1, 0, 1});
    for (int trial = 0; trial < 40; ++trial) {
        const FieldElement a = rng.element(f, 5), b = rng.element(f, 5), c = rng.element(f, 5);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a - a == f.zero());
        CHECK(a + (-a) == f.zero());
    }
}

TEST_CASE("property: automorphisms are ring homomorphisms fixing Q") {
    Sampler rng(99);
    const NumberField cyclo5(Polynomial{1, 1, 1, 1, 1});
    const auto autos = field_automorphisms(cyclo5);
    CHECK(autos.size() == 4);
    for (const NumberField& f : {testing::qsqrt2(), cyclo5}) {
        for (const auto& s : field_automorphisms(f)) {
            for (int trial = 0; trial < 25; ++trial) {
                const FieldElement a = rng.element(f, 6), b = rng.element(f, 6);
                CHECK(s(a * b) == s(a) * s(b));
                CHECK(s(a + b) == s(a) + s(b));
                const Rational r = rng.integer(-20, 20);
                CHECK(s(f.from_rational(r)) == f.from_rational(r));
            }
        }
    }
}

TEST_CASE("property: products of two factors are reducible") {
    Sampler rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> a{rng.integer(-5, 5), rng.integer(-5, 5), 1};
        std::vector<Rational> b{rng.integer(-5, 5), rng.integer(-5, 5), rng.integer(-5, 5), 1};
        const Polynomial p = Polynomial(a) * Polynomial(b);
        CHECK_FALSE(check_irreducible(p));
    }
}

TEST_CASE("property: t^n - 2 is irreducible up to the degree cap") {
    for (std::size_t n = 1; n <= kDefaultMaxDegree; ++n) {
        std::vector<Rational> c(n + 1, 0);
        c[0] = -2;
        c[n] = 1;
        CHECK(check_irreducible(Polynomial(c)));
    }
}

} // TEST_SUITE
