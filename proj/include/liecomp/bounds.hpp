#pragma once

#include "liecomp/lie_algebra.hpp"
#include "liecomp/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liecomp {

struct Prop1Result {
    NumberField field;
    Matrix companion;           // action of the generator on Q^n
    std::vector<Matrix> action; // companion^0, ..., companion^(n-1)
    bool minpoly_vanishes = false;
    std::size_t vectors_checked = 0;
    // Every sampled nonzero v has Q-independent v, Mv, ..., M^(n-1) v.
    bool one_dimensional = false;
};

// Companion action of E = Q[t]/(q) on Q^n: l.x_i = x_(i+1) for i < n and
// l.x_n = -a_0 x_1 - ... - a_(n-1) x_n. Default q = t^n - 2. Throws
// NotIrreducible when q is reducible.
Prop1Result prop1_construct(std::size_t n, const std::optional<Polynomial>& q = std::nullopt,
                            std::uint64_t seed = 0, std::size_t samples = 20,
                            std::size_t max_degree = kDefaultMaxDegree);

// sum q_i M^i
Matrix evaluate(const Polynomial& q, const Matrix& m);

struct DegreeBoundReport {
    std::size_t degree = 1;
    std::vector<std::size_t> basis_dims;  // Q-basis vectors l^t e_i of L_Q
    std::vector<std::size_t> sample_dims; // seeded random nonzero x in L
    // Smallest observed dim_Q C(x): an upper bound on the true minimum.
    std::size_t upper_bound = 0;
};

// Throws LemmaViolation if any observed dim_Q C(x) is below [E:Q].
DegreeBoundReport degree_bound(const LieAlgebra& algebra, std::uint64_t seed = 0, std::size_t samples = 20);

struct PotentialReport {
    bool feasible = false;
    std::optional<std::size_t> degree; // n / m when m divides n
    std::string explanation;
};

// Necessary conditions for a completion with dim_Q L = n and dim_E = m:
// m divides n, and [E:Q] = n/m is at most the centralizer bound when given.
PotentialReport potential_dim_check(std::size_t n, std::size_t m, std::optional<std::size_t> bound = std::nullopt);

} // namespace liecomp
