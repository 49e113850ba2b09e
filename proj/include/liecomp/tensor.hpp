#pragma once

#include "liecomp/lie_algebra.hpp"
#include "liecomp/subspace.hpp"

#include <optional>

namespace liecomp {

// E (x)_Q L for L over Q of dimension n: the same structure constants read
// over E, plus the Q-subspace 1 (x) L of the Q-restriction (coordinates i*d).
struct TensorAlgebra {
    NumberField field;
    LieAlgebra source;
    LieAlgebra algebra;
    Subspace one_tensor_L;
};

TensorAlgebra tensor_product(const NumberField& field, const LieAlgebra& source);

// 1 (x) a as a vector of E^n.
Vector one_tensor(const TensorAlgebra& tensor, const Vector& a);

struct EntanglementReport {
    bool entangled = true;
    // a over Q with 1 (x) a a nonzero element of N, when not entangled.
    std::optional<Vector> witness;
};

// Throws NotAnIdeal unless N is an E-ideal of the tensor algebra, then
// intersects its Q-restriction with 1 (x) L.
EntanglementReport is_entangled(const TensorAlgebra& tensor, const Subspace& N);

// Entries of a rational vector read as constants of E.
Vector as_constants(const NumberField& field, const Vector& rational);
Matrix as_constants(const NumberField& field, const Matrix& rational);
// Entrywise sigma.
Vector apply_automorphism(const FieldAutomorphism& sigma, const Vector& v);

} // namespace liecomp
