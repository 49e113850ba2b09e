#pragma once

#include "liecomp/completion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace liecomp {

// M = K u E. Scalars are the elements of E, the carrier is K, and each
// constant a* names an element of the rational algebra L (coords over Q in
// L's basis) together with its carrier vector.
struct TwoSortedStructure {
    struct Constant {
        std::string label;
        Vector coords; // over Q, length source.dim()
        Vector value;  // over E, length carrier.dim()
    };
    NumberField scalars;
    LieAlgebra carrier;
    LieAlgebra source;
    std::vector<Constant> constants;
    std::vector<Vector> L_basis; // v_1, ..., v_n in the carrier
};

// Constants are the source basis vectors labelled by their basis names;
// L_basis is their image.
TwoSortedStructure make_structure(const Completion& completion);

// Throws EncodingError on inconsistent lengths, fields or labels.
void check_structure(const TwoSortedStructure& m);

// One element of M.
struct Element {
    std::optional<FieldElement> scalar;
    Vector carrier; // empty for scalars
    bool is_scalar() const { return scalar.has_value(); }
    static Element of(const FieldElement& x) { return {x, {}}; }
    static Element of(Vector v) { return {std::nullopt, std::move(v)}; }
    friend bool operator==(const Element& a, const Element& b) {
        return a.is_scalar() == b.is_scalar() && (a.is_scalar() ? *a.scalar == *b.scalar : a.carrier == b.carrier);
    }
};

// Values substituted for the universally quantified variables. Axioms 21-23
// quantify over L and use `l_elements`; axiom 24 also fixes the multiple m.
struct Witness {
    std::vector<Element> elements;
    std::vector<Vector> l_elements;
    std::optional<long> multiple;
};

std::string to_string(const Witness& w);

enum class CheckMode { structural, sampled };
std::string to_string(CheckMode mode);

struct AxiomVerdict {
    int axiom_id;
    CheckMode mode;
    bool passed;
    std::size_t instances = 0;
    std::optional<Witness> witness; // present iff !passed
};

inline constexpr int kAxiomCount = 25;

// Structural mode runs every axiom over a finite generating domain (powers
// of the generator, 0, 1, basis vectors, 0*, and their sums where the law
// is not linear in a variable) which suffices by (multi)linearity; sampled
// mode draws `samples` seeded tuples per axiom. Axiom 9 is read with the
// bracket staying in the carrier sort.
std::vector<AxiomVerdict> check_axioms(const TwoSortedStructure& m, CheckMode mode, std::size_t samples = 20,
                                       std::uint64_t seed = 0);

// True iff the quantifier-free matrix of the axiom holds at w (existential
// witnesses are computed). Guards that fail make the implication true.
bool evaluate_axiom(const TwoSortedStructure& m, int axiom_id, const Witness& w);

// Fixed text on the non-elementary class of scalar fields.
std::string counterexample_note();

} // namespace liecomp
