// Roots of the minimal polynomial inside E = Q(l).
//
// Let Q be the monic integer rescaling of q with root l' = D*l. Every root of
// Q lying in E is an algebraic integer, so its coordinates in the power basis
// of l' lie in (1/disc)Z. Fix a prime p not dividing disc(Q) at which Q has a
// root a mod p; a lifts to a p-adic root and gives an embedding E -> Q_p.
// Each automorphism s sends l' to some other p-adic root b, so
//     sum n_i a^i = disc * b  (mod p^k),  n = disc * coords(s(l')).
// n is the unique short solution once p^k exceeds an explicit height bound,
// and LLL + Babai recovers it. Every candidate is verified exactly, and the
// number of roots mod p caps the number of automorphisms.

#include "liecomp/error.hpp"
#include "liecomp/number_field.hpp"

#include <algorithm>
#include <optional>

namespace liecomp {
namespace {

using IntVec = std::vector<Integer>;

Integer eval_mod(const IntVec& p, const Integer& x, const Integer& mod) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
        acc %= mod;
    }
    if (acc < 0)
        acc += mod;
    return acc;
}

IntVec derivative(const IntVec& p) {
    IntVec d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<unsigned long>(i));
    return d;
}

Integer hensel_lift(const IntVec& p, const IntVec& dp, Integer root, const Integer& mod) {
    for (int iter = 0; iter < 4096; ++iter) {
        const Integer value = eval_mod(p, root, mod);
        if (value == 0)
            return root;
        Integer inv;
        const Integer slope = eval_mod(dp, root, mod);
        if (mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw InternalInvariantViolation("Hensel lift hit a singular root");
        root = (root - value * inv) % mod;
        if (root < 0)
            root += mod;
    }
    throw InternalInvariantViolation("Hensel lift did not converge");
}

Integer round_rational(const Rational& x) {
    Rational shifted = x + Rational(1, 2);
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return r;
}

// Textbook LLL (delta = 3/4) with exact Gram-Schmidt bookkeeping.
class Lattice {
public:
    explicit Lattice(std::vector<IntVec> basis) : b_(std::move(basis)), n_(b_.size()) {
        mu_.assign(n_, std::vector<Rational>(n_));
        bnorm_.assign(n_, 0);
        gram_schmidt();
        reduce();
        gram_schmidt();
    }

    // Babai nearest plane: returns target - w for the lattice point w found.
    IntVec residual(IntVec target) const {
        for (std::size_t i = n_; i-- > 0;) {
            Rational dot = 0;
            for (std::size_t c = 0; c < target.size(); ++c)
                dot += Rational(target[c]) * bstar_[i][c];
            const Integer coeff = round_rational(dot / bnorm_[i]);
            if (coeff == 0)
                continue;
            for (std::size_t c = 0; c < target.size(); ++c)
                target[c] -= coeff * b_[i][c];
        }
        return target;
    }

private:
    static Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += a[i] * b[i];
        return s;
    }

    void gram_schmidt() {
        bstar_.assign(n_, {});
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<Rational> v(b_[i].begin(), b_[i].end());
            std::vector<Rational> bi = v;
            for (std::size_t j = 0; j < i; ++j) {
                mu_[i][j] = dot(v, bstar_[j]) / bnorm_[j];
                for (std::size_t c = 0; c < v.size(); ++c)
                    bi[c] -= mu_[i][j] * bstar_[j][c];
            }
            bnorm_[i] = dot(bi, bi);
            bstar_[i] = std::move(bi);
        }
    }

    void size_reduce(std::size_t k, std::size_t l) {
        const Integer q = round_rational(mu_[k][l]);
        if (q == 0)
            return;
        for (std::size_t c = 0; c < b_[k].size(); ++c)
            b_[k][c] -= q * b_[l][c];
        for (std::size_t j = 0; j < l; ++j)
            mu_[k][j] -= Rational(q) * mu_[l][j];
        mu_[k][l] -= q;
    }

    void reduce() {
        const Rational delta(3, 4);
        std::size_t k = 1;
        while (k < n_) {
            size_reduce(k, k - 1);
            if (bnorm_[k] >= (delta - mu_[k][k - 1] * mu_[k][k - 1]) * bnorm_[k - 1]) {
                for (std::size_t l = k - 1; l-- > 0;)
                    size_reduce(k, l);
                ++k;
                continue;
            }
            const Rational m = mu_[k][k - 1];
            const Rational bk = bnorm_[k] + m * m * bnorm_[k - 1];
            mu_[k][k - 1] = m * bnorm_[k - 1] / bk;
            bnorm_[k] = bnorm_[k - 1] * bnorm_[k] / bk;
            bnorm_[k - 1] = bk;
            std::swap(b_[k], b_[k - 1]);
            for (std::size_t j = 0; j + 1 < k; ++j)
                std::swap(mu_[k][j], mu_[k - 1][j]);
            for (std::size_t i = k + 1; i < n_; ++i) {
                const Rational t = mu_[i][k];
                mu_[i][k] = mu_[i][k - 1] - m * t;
                mu_[i][k - 1] = t + mu_[k][k - 1] * mu_[i][k];
            }
            k = std::max<std::size_t>(1, k - 1);
        }
    }

    std::vector<IntVec> b_;
    std::size_t n_;
    std::vector<std::vector<Rational>> mu_;
    std::vector<Rational> bnorm_;
    std::vector<std::vector<Rational>> bstar_;
};

std::vector<unsigned long> small_primes(unsigned long limit) {
    std::vector<bool> composite(limit + 1);
    std::vector<unsigned long> primes;
    for (unsigned long i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (unsigned long j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

struct PadicSetup {
    unsigned long prime = 0;
    std::vector<Integer> roots; // roots of Q mod p
};

} // namespace

std::vector<FieldAutomorphism> field_automorphisms(const NumberField& field) {
    const std::size_t d = field.degree();
    std::vector<FieldAutomorphism> result{FieldAutomorphism::identity(field)};
    if (d == 1)
        return result;

    const Polynomial& q = field.minpoly();
    Integer scale = 1;
    for (const auto& c : q.coeffs())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    // Q(t) = scale^d q(t / scale), monic with integer coefficients.
    IntVec big_q(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        const Rational c = q.coeff(i) * Rational(ipow(scale, static_cast<unsigned long>(d - i)));
        big_q[i] = c.get_num();
    }
    const IntVec big_dq = derivative(big_q);
    std::vector<Rational> qc(big_q.begin(), big_q.end());
    const Integer disc = abs(discriminant(Polynomial(qc)).get_num());

    PadicSetup setup;
    int examined = 0;
    for (unsigned long p : small_primes(200000)) {
        if (disc % p == 0)
            continue;
        std::vector<Integer> roots;
        const Integer mod(p);
        for (unsigned long x = 0; x < p; ++x)
            if (eval_mod(big_q, Integer(x), mod) == 0)
                roots.emplace_back(x);
        if (roots.empty())
            continue;
        if (setup.prime == 0 || roots.size() < setup.roots.size())
            setup = {p, roots};
        if (setup.roots.size() == 1 || ++examined >= 40)
            break;
    }
    if (setup.prime == 0)
        throw InternalInvariantViolation("no prime with a simple root found for " + q.str());
    const std::size_t cap = setup.roots.size();
    if (cap == 1)
        return result;

    // Height bound for n = disc * coords(s(l')): Cauchy root bound R, Lagrange
    // basis coefficients <= 2^(d-1) R^(d-1) / |Q'(a_j)|, and
    // 1/|Q'(a_j)| <= (2R)^((d-1)^2) since prod |Q'(a_j)| = |disc| >= 1.
    Integer root_bound = 0;
    for (std::size_t i = 0; i < d; ++i)
        root_bound = std::max(root_bound, Integer(abs(big_q[i])));
    root_bound += 1;
    const auto dm1 = static_cast<unsigned long>(d - 1);
    const Integer coord_bound = Integer(static_cast<unsigned long>(d)) * root_bound * ipow(2, dm1) *
                                ipow(root_bound, dm1) * ipow(2 * root_bound, dm1 * dm1);
    const Integer height = disc * coord_bound;
    // Babai lands within 2^(d/2)+1 of the target's true offset; any nonzero
    // lattice vector v satisfies p^k <= |N(v)| <= (|v|_1 R^(d-1))^d.
    const Integer babai = ipow(2, static_cast<unsigned long>((d + 1) / 2)) + 1;
    const Integer threshold = ipow(2 * static_cast<unsigned long>(d) * babai * height * ipow(root_bound, dm1),
                                   static_cast<unsigned long>(d));

    const Integer prime(setup.prime);
    const Integer alpha0 = setup.roots.front();
    std::vector<FieldAutomorphism> found;

    for (std::size_t r = 1; r < setup.roots.size() && result.size() + found.size() < cap; ++r) {
        for (unsigned long k = 4;; k *= 2) {
            const Integer mod = ipow(prime, k);
            const Integer alpha = hensel_lift(big_q, big_dq, alpha0, mod);
            const Integer beta = hensel_lift(big_q, big_dq, setup.roots[r], mod);
            std::vector<IntVec> basis(d, IntVec(d, 0));
            basis[0][0] = mod;
            Integer power = 1;
            for (std::size_t i = 1; i < d; ++i) {
                power = (power * alpha) % mod;
                basis[i][0] = (mod - power) % mod;
                basis[i][i] = 1;
            }
            IntVec target(d, 0);
            target[0] = (disc * beta) % mod;
            const IntVec n = Lattice(std::move(basis)).residual(std::move(target));

            // s(l) = s(l') / scale = sum (n_i / disc) scale^(i-1) l^i.
            std::vector<Rational> coords(d);
            for (std::size_t i = 0; i < d; ++i) {
                Rational c(n[i], disc);
                c.canonicalize();
                if (i == 0)
                    c /= Rational(scale);
                else
                    c *= Rational(ipow(scale, static_cast<unsigned long>(i - 1)));
                coords[i] = c;
            }
            const FieldElement image = field.element(std::move(coords));
            if (evaluate(q, image).is_zero()) {
                if (!(image == field.generator()) &&
                    std::none_of(found.begin(), found.end(),
                                 [&](const FieldAutomorphism& a) { return a.image_of_generator() == image; }))
                    found.emplace_back(field, image);
                break;
            }
            if (mod > threshold)
                break;
        }
    }
    std::sort(found.begin(), found.end(), [](const FieldAutomorphism& a, const FieldAutomorphism& b) {
        return a.image_of_generator().coeffs() < b.image_of_generator().coeffs();
    });
    result.insert(result.end(), found.begin(), found.end());
    return result;
}

} // namespace liecomp
