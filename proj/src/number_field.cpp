#include "liecomp/number_field.hpp"

#include "liecomp/error.hpp"

#include <utility>

namespace liecomp {

NumberField::NumberField(const Polynomial& minpoly, std::size_t max_degree) : NumberField(minpoly, Unchecked{}) {
    if (!check_irreducible(minpoly, max_degree))
        throw NotIrreducible("minimal polynomial " + minpoly.str() + " is reducible over Q");
}

NumberField::NumberField(const Polynomial& minpoly, Unchecked) {
    if (!minpoly.is_monic() || minpoly.degree() < 1)
        throw Error("minimal polynomial must be monic of degree >= 1");
    auto impl = std::make_shared<Impl>();
    impl->minpoly = minpoly;
    impl->degree = static_cast<std::size_t>(minpoly.degree());
    impl->is_rationals = minpoly == Polynomial{0, 1};
    const std::size_t d = impl->degree;
    impl->powers.assign(2 * d - 1, std::vector<Rational>(d));
    for (std::size_t k = 0; k < d; ++k)
        impl->powers[k][k] = 1;
    for (std::size_t k = d; k + 1 < 2 * d; ++k) {
        // t^k = t * t^(k-1); shift then fold t^d back in.
        const auto& prev = impl->powers[k - 1];
        auto& cur = impl->powers[k];
        const Rational top = prev[d - 1];
        for (std::size_t i = d - 1; i > 0; --i)
            cur[i] = prev[i - 1];
        cur[0] = 0;
        for (std::size_t i = 0; i < d; ++i)
            cur[i] -= top * minpoly.coeff(i);
    }
    impl_ = std::move(impl);
}

NumberField NumberField::rationals() {
    static const NumberField q(Polynomial{0, 1}, Unchecked{});
    return q;
}

FieldElement NumberField::zero() const { return FieldElement(*this, std::vector<Rational>(degree())); }

FieldElement NumberField::one() const { return from_rational(1); }

FieldElement NumberField::generator() const {
    if (degree() == 1)
        return from_rational(-minpoly().coeff(0));
    std::vector<Rational> c(degree());
    c[1] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement NumberField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree());
    c[0] = r;
    return FieldElement(*this, std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> coeffs) const { return FieldElement(*this, std::move(coeffs)); }

std::string NumberField::describe() const {
    if (is_rationals())
        return "Q";
    return "Q[t]/(" + minpoly().str() + ")";
}

FieldElement::FieldElement(NumberField field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_.degree())
        throw Error("field element needs " + std::to_string(field_.degree()) + " coefficients, got " +
                    std::to_string(coeffs_.size()));
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool FieldElement::is_one() const {
    if (coeffs_[0] != 1)
        return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

void FieldElement::require_same_field(const FieldElement& b) const {
    if (!(field_ == b.field_))
        throw FieldMismatch();
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
    require_same_field(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += b.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
    require_same_field(b);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= b.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
    require_same_field(b);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] *= b.coeffs_[0];
        return *this;
    }
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] += coeffs_[i] * b.coeffs_[j];
    }
    for (std::size_t i = 0; i < d; ++i)
        coeffs_[i] = prod[i];
    for (std::size_t k = d; k < prod.size(); ++k) {
        if (prod[k] == 0)
            continue;
        const auto& red = field_.power(k);
        for (std::size_t i = 0; i < d; ++i)
            coeffs_[i] += prod[k] * red[i];
    }
    return *this;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    const std::size_t d = coeffs_.size();
    if (d == 1)
        return FieldElement(field_, {1 / coeffs_[0]});
    const auto eg = extended_gcd(as_polynomial(), field_.minpoly());
    // The minimal polynomial is irreducible, so the gcd is 1.
    if (eg.g.degree() != 0)
        throw InternalInvariantViolation("non-invertible element in a field");
    std::vector<Rational> c(d);
    const auto r = divmod(eg.s, field_.minpoly()).remainder;
    for (std::size_t i = 0; i < d; ++i)
        c[i] = r.coeff(i);
    return FieldElement(field_, std::move(c));
}

std::string FieldElement::str() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        const Rational mag = abs(c);
        std::string term;
        if (i == 0)
            term = to_string(mag);
        else {
            term = mag == 1 ? "t" : to_string(mag) + "*t";
            if (i > 1)
                term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

FieldElement nf_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
    switch (op) {
    case FieldOp::add:
        return a + b;
    case FieldOp::sub:
        return a - b;
    case FieldOp::mul:
        return a * b;
    }
    throw Error("unknown field operation");
}

FieldElement evaluate(const Polynomial& p, const FieldElement& x) {
    FieldElement acc = x.field().zero();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= x;
        acc += x.field().from_rational(*it);
    }
    return acc;
}

FieldAutomorphism::FieldAutomorphism(NumberField field, FieldElement image_of_generator)
    : field_(std::move(field)), image_(std::move(image_of_generator)) {
    if (!(image_.field() == field_))
        throw FieldMismatch();
    if (!evaluate(field_.minpoly(), image_).is_zero())
        throw Error("automorphism image " + image_.str() + " is not a root of the minimal polynomial");
}

FieldAutomorphism FieldAutomorphism::identity(const NumberField& field) {
    return FieldAutomorphism(field, field.generator());
}

FieldElement FieldAutomorphism::operator()(const FieldElement& a) const {
    if (!(a.field() == field_))
        throw FieldMismatch();
    if (field_.degree() == 1)
        return a;
    FieldElement acc = field_.zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        acc *= image_;
        acc += field_.from_rational(a.coeffs()[i]);
    }
    return acc;
}

} // namespace liecomp
