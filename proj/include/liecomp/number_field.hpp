#pragma once

#include "liecomp/polynomial.hpp"
#include "liecomp/rational.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace liecomp {

class FieldElement;

// E = Q[t]/(q) for a monic irreducible q. The generator is the residue class
// of t; no complex embedding is ever chosen. Q itself is the degree one field
// with q = t. Copies share one immutable representation.
class NumberField {
public:
    // Verifies q monic and irreducible; throws NotIrreducible or
    // DegreeTooLarge.
    explicit NumberField(const Polynomial& minpoly, std::size_t max_degree = kDefaultMaxDegree);

    static NumberField rationals();

    std::size_t degree() const { return impl_->degree; }
    const Polynomial& minpoly() const { return impl_->minpoly; }
    // True only for the canonical presentation Q[t]/(t).
    bool is_rationals() const { return impl_->is_rationals; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement generator() const;
    FieldElement from_rational(const Rational& r) const;
    // coeffs.size() must equal degree().
    FieldElement element(std::vector<Rational> coeffs) const;

    // Reduction of t^k for k in [0, 2d-1) into the power basis.
    const std::vector<Rational>& power(std::size_t k) const { return impl_->powers[k]; }

    std::string describe() const;

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.impl_ == b.impl_ || a.impl_->minpoly == b.impl_->minpoly;
    }

private:
    struct Impl {
        Polynomial minpoly;
        std::size_t degree = 1;
        bool is_rationals = false;
        std::vector<std::vector<Rational>> powers;
    };
    struct Unchecked {};
    NumberField(const Polynomial& minpoly, Unchecked);

    std::shared_ptr<const Impl> impl_;
};

// sum coeffs[i] * t^i in a NumberField.
class FieldElement {
public:
    FieldElement(NumberField field, std::vector<Rational> coeffs);

    const NumberField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool is_one() const;
    // Only meaningful when the element lies in Q.
    bool is_rational() const;

    // Throws DivisionByZero on zero; extended gcd against the minimal
    // polynomial otherwise.
    FieldElement inverse() const;

    FieldElement& operator+=(const FieldElement& b);
    FieldElement& operator-=(const FieldElement& b);
    FieldElement& operator*=(const FieldElement& b);
    FieldElement& operator*=(const Rational& s);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
    friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.coeffs_ == b.coeffs_ && a.field_ == b.field_;
    }

    Polynomial as_polynomial() const { return Polynomial(coeffs_); }

    // "c0 + c1*t + c2*t^2", zero terms omitted.
    std::string str() const;

private:
    void require_same_field(const FieldElement& b) const;

    NumberField field_;
    std::vector<Rational> coeffs_;
};

enum class FieldOp { add, sub, mul };
FieldElement nf_arith(const FieldElement& a, const FieldElement& b, FieldOp op);
inline FieldElement nf_inverse(const FieldElement& a) { return a.inverse(); }

// Evaluates p at a field element.
FieldElement evaluate(const Polynomial& p, const FieldElement& x);

// sigma(t) = image_of_generator, extended as a ring homomorphism.
class FieldAutomorphism {
public:
    // Throws Error unless minpoly(image) == 0.
    FieldAutomorphism(NumberField field, FieldElement image_of_generator);

    static FieldAutomorphism identity(const NumberField& field);

    const NumberField& field() const { return field_; }
    const FieldElement& image_of_generator() const { return image_; }
    bool is_identity() const { return image_ == field_.generator(); }

    FieldElement operator()(const FieldElement& a) const;

    friend bool operator==(const FieldAutomorphism& a, const FieldAutomorphism& b) {
        return a.image_ == b.image_;
    }

private:
    NumberField field_;
    FieldElement image_;
};

inline FieldElement apply_automorphism(const FieldAutomorphism& sigma, const FieldElement& a) {
    return sigma(a);
}

// All roots of the minimal polynomial inside E, identity first, the rest in
// lexicographic order of their coefficient vectors.
std::vector<FieldAutomorphism> field_automorphisms(const NumberField& field);

} // namespace liecomp
