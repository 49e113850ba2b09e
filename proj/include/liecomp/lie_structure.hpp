#pragma once

#include "liecomp/lie_algebra.hpp"
#include "liecomp/subspace.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace liecomp {

// C_L(x) = ker ad(x).
Subspace centralizer(const LieAlgebra& algebra, const Vector& x);
// Common kernel of ad(e_i) over the basis.
Subspace center(const LieAlgebra& algebra);

struct CentroidReport {
    // alpha(e_j) = sum_i basis[k](i, j) e_i
    std::vector<Matrix> basis;
    bool contains_identity = false;
    bool closed_under_multiplication = false;
    bool commutative = false;
    // Every basis element and every sampled combination is invertible.
    bool every_nonzero_invertible = false;
    std::size_t dim() const { return basis.size(); }
    bool is_field() const { return closed_under_multiplication && commutative && every_nonzero_invertible; }
};

// Solves [alpha(e_i), e_j] = alpha([e_i, e_j]) for all i, j over the n^2
// entries of alpha. Invertibility is checked on the basis and on `samples`
// seeded random combinations.
CentroidReport centroid(const LieAlgebra& algebra, std::uint64_t seed = 0, std::size_t samples = 20);

// Smallest ideal containing gens: saturate under [e_i, .] until the dimension
// stops growing.
Subspace ideal_closure(const LieAlgebra& algebra, const std::vector<Vector>& gens);
bool is_ideal(const LieAlgebra& algebra, const Subspace& s);
// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);

enum class SeriesKind { lower_central, derived };

struct SeriesReport {
    SeriesKind kind;
    // gamma_1, gamma_2, ... or L^(0), L^(1), ...; stops at the first term
    // equal to its predecessor or at zero.
    std::vector<Subspace> terms;
    std::vector<std::size_t> dims;
    bool terminated_at_zero = false;
    // Nilpotency class or derived length; empty when the series stalls.
    std::optional<std::size_t> class_or_length;
};

SeriesReport series(const LieAlgebra& algebra, SeriesKind kind);
std::string to_string(SeriesKind kind);

struct LinearMap {
    LieAlgebra source;
    LieAlgebra target;
    Matrix matrix; // target.dim() x source.dim(); column j = image of e_j
};

enum class HomomorphismMode { hom, embedding, automorphism };

struct HomomorphismReport {
    bool ok = true;
    std::string failure; // empty when ok
    std::optional<std::pair<std::size_t, std::size_t>> bracket_witness;
    std::optional<Vector> kernel_witness;
};

// phi[e_i, e_j] = [phi e_i, phi e_j] on all basis pairs; embedding also needs
// a zero kernel, automorphism needs source == target and bijectivity.
HomomorphismReport check_homomorphism(const LinearMap& phi, HomomorphismMode mode);

} // namespace liecomp
