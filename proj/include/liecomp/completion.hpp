#pragma once

#include "liecomp/lie_structure.hpp"
#include "liecomp/tensor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liecomp {

// K = (E (x)_Q L) / N on the cosets of the coordinates that are not pivots
// of N's echelon basis.
struct Completion {
    TensorAlgebra tensor;
    Subspace N;
    std::vector<std::size_t> complement;
    LieAlgebra K;
    // dim_E K x n over E; column j is the coset of 1 (x) e_j.
    Matrix embedding;

    // Coordinates in K of the coset v + N.
    Vector project(const Vector& v) const;
    Subspace project(const Subspace& s) const;
    // Coordinates in K of the coset of 1 (x) a for a over Q.
    Vector embed(const Vector& a) const { return embedding.apply(as_constants(tensor.field, a)); }
};

// Throws NotEntangled (or NotAnIdeal) when N does not give a completion.
// Re-verifies that a -> 1 (x) a + N is injective and spans K over E.
Completion quotient_completion(const TensorAlgebra& tensor, const Subspace& N);

// I is a Q-ideal of the Q-restriction L_Q of an E-algebra L, f a Q-linear
// automorphism of L_Q, sigma an automorphism of E.
struct TwistData {
    Subspace I;
    Matrix f;
    FieldAutomorphism sigma;
};

TwistData identity_twist(const LieAlgebra& algebra);

struct TwistedIdeal {
    TensorAlgebra tensor; // E (x)_Q L_Q
    Subspace N;
};

// N(I, f, sigma) = { sum x_i (x) a_i in E (x) I : sum sigma(x_i) f(a_i) = 0 }.
// Throws NotAnIdeal / NotAnAutomorphism on bad twist data and
// InternalInvariantViolation if the result is not an entangled ideal.
TwistedIdeal twisted_ideal(const LieAlgebra& algebra, const TwistData& twist);
Completion twisted_completion(const LieAlgebra& algebra, const TwistData& twist);

// (sigma (x) f)(N) as an E-subspace: w -> f(sigma(w)) coordinatewise.
Subspace conjugate_subspace(const Subspace& N, const Matrix& f, const FieldAutomorphism& sigma);

struct ScalarActionCheck {
    std::size_t basis_index; // Q-basis index of L_Q
    FieldElement scalar;
    Vector lhs; // x . (1 (x) a + N)
    Vector rhs; // 1 (x) f^-1(sigma(x) f(a)) + N
    bool ok;
};

struct ScalarActionReport {
    bool ok = true;
    bool surjective = true;
    std::vector<ScalarActionCheck> checks;
    std::optional<std::size_t> first_failure; // index into checks
};

// Needs I = L_Q. Tests x in {1, generator, one seeded random element}.
ScalarActionReport verify_scalar_action(const LieAlgebra& algebra, const TwistData& twist, std::uint64_t seed = 0);

struct PreservationReport {
    SeriesReport source_lower, source_derived, quotient_lower, quotient_derived;
    bool class_equal = false;
    bool length_equal = false;
    // gamma_n(K) and K^(n) equal the images of E (x) gamma_n(L), E (x) L^(n).
    bool images_equal = false;
    std::optional<std::string> failure;
    bool ok() const { return class_equal && length_equal && images_equal; }
};

PreservationReport preservation_check(const Completion& completion);

} // namespace liecomp
