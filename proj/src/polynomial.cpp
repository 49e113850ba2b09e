#include "liecomp/polynomial.hpp"

#include "liecomp/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace liecomp {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return {};
    const Rational inv = 1 / leading();
    return inv * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) - b.coeff(i);
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> r(a.coeffs_);
    for (auto& c : r)
        c *= s;
    return Polynomial(std::move(r));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        std::string term;
        const bool neg = c < 0;
        const Rational mag = abs(c);
        if (i == 0 || mag != 1)
            term = to_string(mag);
        if (i > 0) {
            if (!term.empty())
                term += "*";
            term += var;
            if (i > 1)
                term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = neg ? "-" + term : term;
        else
            out += (neg ? " - " : " + ") + term;
    }
    return out;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw DivisionByZero();
    std::vector<Rational> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db)
        return {Polynomial{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv_lead = 1 / b.leading();
    for (long i = a.degree(); i >= db; --i) {
        const Rational q = rem[static_cast<std::size_t>(i)] * inv_lead;
        quot[static_cast<std::size_t>(i - db)] = q;
        if (q == 0)
            continue;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0{1}, s1{};
    Polynomial t0{}, t1{1};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    const Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

std::vector<Integer> primitive_integer_part(const Polynomial& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content == 0)
        return out;
    if (out.back() < 0)
        content = -content;
    for (auto& v : out)
        v /= content;
    return out;
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        throw Error("resultant of the zero polynomial");
    const auto m = static_cast<std::size_t>(a.degree());
    const auto n = static_cast<std::size_t>(b.degree());
    const std::size_t size = m + n;
    if (size == 0)
        return 1;
    // Sylvester matrix, rows are shifted coefficient vectors (descending).
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i)
            s[r][r + i] = a.coeffs()[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i)
            s[n + r][r + i] = b.coeffs()[n - i];
    Rational det = 1;
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t piv = col;
        while (piv < size && s[piv][col] == 0)
            ++piv;
        if (piv == size)
            return 0;
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        for (std::size_t r = col + 1; r < size; ++r) {
            if (s[r][col] == 0)
                continue;
            const Rational f = s[r][col] / s[col][col];
            for (std::size_t c = col; c < size; ++c)
                s[r][c] -= f * s[col][c];
        }
    }
    return det;
}

Rational discriminant(const Polynomial& p) {
    const long n = p.degree();
    if (n < 1)
        throw Error("discriminant of a constant polynomial");
    Rational r = resultant(p, p.derivative()) / p.leading();
    if ((n * (n - 1) / 2) % 2 == 1)
        r = -r;
    return r;
}

namespace {

std::vector<Integer> positive_divisors(Integer v) {
    v = abs(v);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer f = 2; f * f <= v; ++f) {
        unsigned e = 0;
        while (v % f == 0) {
            v /= f;
            ++e;
        }
        if (e)
            factors.emplace_back(f, e);
    }
    if (v > 1)
        factors.emplace_back(v, 1);
    std::vector<Integer> divs{1};
    for (const auto& [prime, exp] : factors) {
        const std::size_t base = divs.size();
        Integer pw = 1;
        for (unsigned e = 1; e <= exp; ++e) {
            pw *= prime;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Integer eval_int(const std::vector<Integer>& p, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Searches for an integer factor of `p` of exact degree k (Kronecker).
class FactorSearch {
public:
    FactorSearch(const std::vector<Integer>& p, unsigned k) : p_(p), k_(k) {
        for (const auto& c : p_)
            norm_sq_ += c * c;
    }

    // Returns true when a factor exists; sets root_found_ if an integer
    // evaluation point is itself a root.
    bool run() {
        for (long step = 0; points_.size() < k_ + 1; ++step) {
            const long x = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
            const Integer v = eval_int(p_, Integer(x));
            if (v == 0)
                return true;
            points_.emplace_back(x);
            divisors_.push_back(positive_divisors(v));
        }
        values_.resize(k_ + 1);
        return descend(0);
    }

private:
    bool descend(std::size_t j) {
        if (j == points_.size())
            return try_candidate();
        for (const auto& d : divisors_[j]) {
            for (int sign : {1, -1}) {
                if (j == 0 && sign < 0)
                    continue; // g and -g are the same factor
                values_[j] = sign * d;
                if (consistent(j) && descend(j + 1))
                    return true;
            }
        }
        return false;
    }

    // Integer polynomials satisfy (a - b) | (g(a) - g(b)).
    bool consistent(std::size_t j) const {
        for (std::size_t i = 0; i < j; ++i) {
            const Integer dx = points_[j] - points_[i];
            if ((values_[j] - values_[i]) % dx != 0)
                return false;
        }
        return true;
    }

    bool try_candidate() const {
        // Newton divided differences, then expansion to monomial basis.
        const std::size_t m = points_.size();
        std::vector<Rational> dd(values_.begin(), values_.end());
        for (std::size_t level = 1; level < m; ++level)
            for (std::size_t i = m - 1; i >= level; --i)
                dd[i] = (dd[i] - dd[i - 1]) / Rational(points_[i] - points_[i - level]);
        Polynomial g{};
        for (std::size_t i = m; i-- > 0;) {
            g = g * Polynomial(std::vector<Rational>{Rational(-points_[i]), Rational(1)});
            g = g + Polynomial(std::vector<Rational>{dd[i]});
        }
        if (g.degree() != static_cast<long>(k_))
            return false;
        for (std::size_t i = 0; i <= k_; ++i) {
            const Rational& c = g.coeffs()[i];
            if (!is_integer(c))
                return false;
            const Integer bound = binomial(k_, static_cast<unsigned>(i));
            if (c.get_num() * c.get_num() > bound * bound * norm_sq_)
                return false;
        }
        if (p_.back() % g.leading().get_num() != 0)
            return false;
        std::vector<Rational> pc(p_.begin(), p_.end());
        return divmod(Polynomial(std::move(pc)), g).remainder.is_zero();
    }

    const std::vector<Integer>& p_;
    unsigned k_;
    Integer norm_sq_ = 0;
    std::vector<Integer> points_;
    std::vector<std::vector<Integer>> divisors_;
    std::vector<Integer> values_;
};

} // namespace

bool check_irreducible(const Polynomial& p, std::size_t max_degree) {
    if (!p.is_monic() || p.degree() < 1)
        throw Error("irreducibility test needs a monic polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(p.degree());
    if (n > max_degree)
        throw DegreeTooLarge(n, max_degree);
    if (n == 1)
        return true;
    const auto ip = primitive_integer_part(p);
    for (unsigned k = 1; k <= n / 2; ++k)
        if (FactorSearch(ip, k).run())
            return false;
    return true;
}

} // namespace liecomp
