#pragma once

#include "liecomp/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace liecomp {

// Dense univariate polynomial over Q, coefficients in ascending degree.
// Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t degree);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    // Coefficient of t^i, zero past the end.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// s*a + t*b == g with g the monic gcd.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

// Integer polynomial with the same roots: denominators cleared and the
// content divided out, leading coefficient positive.
std::vector<Integer> primitive_integer_part(const Polynomial& p);

// Resultant of two nonzero polynomials, via the Sylvester determinant.
Rational resultant(const Polynomial& a, const Polynomial& b);
Rational discriminant(const Polynomial& p);

inline constexpr std::size_t kDefaultMaxDegree = 8;

// Irreducibility over Q for monic p of degree >= 1. Exhaustive search for an
// integer factor of each degree k <= deg/2: candidate factors are pinned by
// their values at k+1 integer points (each a divisor of p's value there),
// pruned by the integrality constraint (a-b) | (g(a)-g(b)) and by the
// Mignotte coefficient bound, then confirmed by exact division.
// Throws DegreeTooLarge when deg(p) > max_degree.
bool check_irreducible(const Polynomial& p, std::size_t max_degree = kDefaultMaxDegree);

} // namespace liecomp
