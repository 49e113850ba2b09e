#include "liecomp/sigma.hpp"

#include "liecomp/error.hpp"
#include "liecomp/rng.hpp"

#include <array>
#include <functional>
#include <set>

namespace liecomp {

namespace {

enum class Sort { scalar, carrier, any };

// Variable sorts of each axiom's universal block (index = axiom id).
// Axioms 21-23 range over L instead and are handled separately.
const std::array<std::vector<Sort>, kAxiomCount + 1> kSignature = [] {
    using S = Sort;
    std::array<std::vector<Sort>, kAxiomCount + 1> sig;
    sig[1] = {S::scalar, S::scalar};
    sig[2] = {S::scalar, S::scalar};
    sig[3] = {S::scalar, S::scalar, S::scalar};
    sig[4] = {S::scalar};
    sig[5] = {S::any};
    sig[6] = {S::scalar};
    sig[7] = {S::scalar, S::scalar, S::scalar};
    sig[8] = {S::scalar};
    sig[9] = {S::carrier, S::carrier};
    sig[10] = {S::carrier, S::carrier};
    sig[11] = {S::carrier};
    sig[12] = {S::carrier, S::carrier, S::carrier};
    sig[13] = {S::carrier};
    sig[14] = {S::carrier};
    sig[15] = {S::carrier, S::carrier, S::carrier};
    sig[16] = {S::any, S::carrier, S::carrier};
    sig[17] = {S::scalar, S::carrier};
    sig[18] = {S::scalar, S::carrier, S::carrier};
    sig[19] = {S::scalar, S::scalar, S::carrier};
    sig[20] = {S::scalar, S::scalar, S::carrier};
    sig[24] = {S::scalar};
    sig[25] = {S::carrier};
    return sig;
}();

std::size_t l_arity(int id) { return id == 21 ? 1 : (id == 22 || id == 23) ? 2 : 0; }

// Interpretation of 0, 1, 0*, + and x over M.
class Model {
public:
    explicit Model(const TwoSortedStructure& m) : m_(m), phi_(NumberField::rationals(), 0, 0) {
        check_structure(m);
        const NumberField& q = NumberField::rationals();
        const std::size_t n = m.source.dim();
        std::vector<Vector> cols;
        Subspace seen(q, n);
        for (std::size_t c = 0; c < m.constants.size() && cols.size() < n; ++c) {
            const Subspace next = seen.sum(Subspace::span(q, n, std::vector<Vector>{m.constants[c].coords}));
            if (next.dim() > seen.dim()) {
                seen = next;
                cols.push_back(m.constants[c].coords);
                chosen_.push_back(c);
            }
        }
        phi_ = *inverse(Matrix::from_columns(q, n, cols));
    }

    const TwoSortedStructure& structure() const { return m_; }

    Element zero() const { return Element::of(m_.scalars.zero()); }
    Element one() const { return Element::of(m_.scalars.one()); }
    Element zero_star() const { return Element::of(m_.carrier.zero()); }

    Element add(const Element& a, const Element& b) const {
        if (a.is_scalar() && b.is_scalar())
            return Element::of(*a.scalar + *b.scalar);
        if (!a.is_scalar() && !b.is_scalar())
            return Element::of(a.carrier + b.carrier);
        return zero_star();
    }

    Element mul(const Element& a, const Element& b) const {
        if (a.is_scalar() && b.is_scalar())
            return Element::of(*a.scalar * *b.scalar);
        if (!a.is_scalar() && !b.is_scalar())
            return Element::of(m_.carrier.bracket(a.carrier, b.carrier));
        return a.is_scalar() ? Element::of(*a.scalar * b.carrier) : Element::of(*b.scalar * a.carrier);
    }

    // a* for a in L: the listed constant when a is labelled, otherwise the
    // Q-linear extension from a basis among the labels.
    Vector star(const Vector& a) const {
        for (const auto& c : m_.constants)
            if (c.coords == a)
                return c.value;
        const Vector y = phi_.apply(a);
        Vector out = m_.carrier.zero();
        for (std::size_t j = 0; j < chosen_.size(); ++j)
            axpy(out, m_.scalars.from_rational(y[j][0]), m_.constants[chosen_[j]].value);
        return out;
    }

    bool holds(int id, const Witness& w) const;

private:
    const TwoSortedStructure& m_;
    Matrix phi_; // coords in L -> coefficients on the chosen labels
    std::vector<std::size_t> chosen_;
};

bool q(const Element& x) { return x.is_scalar(); }

bool Model::holds(int id, const Witness& w) const {
    if (id < 1 || id > kAxiomCount)
        throw EncodingError("axiom ids run from 1 to 25");
    const auto& sig = kSignature[static_cast<std::size_t>(id)];
    if (w.elements.size() != sig.size() || w.l_elements.size() != l_arity(id) || (id == 24) != w.multiple.has_value())
        throw EncodingError("witness does not match the variables of axiom " + std::to_string(id));
    for (std::size_t i = 0; i < sig.size(); ++i) {
        const Element& e = w.elements[i];
        if (e.is_scalar() ? !(e.scalar->field() == m_.scalars)
                          : (e.carrier.size() != m_.carrier.dim() ||
                             (!e.carrier.empty() && !(e.carrier[0].field() == m_.scalars))))
            throw EncodingError("witness element outside M");
        // A guard that fails makes the implication true.
        if ((sig[i] == Sort::scalar && !q(e)) || (sig[i] == Sort::carrier && q(e)))
            return true;
    }
    for (const auto& a : w.l_elements)
        if (a.size() != m_.source.dim())
            throw EncodingError("element of L has the wrong length");

    const auto& e = w.elements;
    const auto eq = [](const Element& a, const Element& b) { return a == b; };
    switch (id) {
    case 1:
        return q(add(e[0], e[1])) && q(mul(e[0], e[1]));
    case 2:
        return eq(add(e[0], e[1]), add(e[1], e[0])) && eq(mul(e[0], e[1]), mul(e[1], e[0]));
    case 3:
        return eq(add(add(e[0], e[1]), e[2]), add(e[0], add(e[1], e[2]))) &&
               eq(mul(mul(e[0], e[1]), e[2]), mul(e[0], mul(e[1], e[2])));
    case 4:
        return eq(add(e[0], zero()), e[0]);
    case 5:
        return eq(mul(one(), e[0]), e[0]);
    case 6: {
        const Element y = Element::of(-*e[0].scalar);
        return q(y) && eq(add(e[0], y), zero());
    }
    case 7:
        return eq(mul(e[0], add(e[1], e[2])), add(mul(e[0], e[1]), mul(e[0], e[2])));
    case 8: {
        if (e[0].scalar->is_zero())
            return true;
        const Element y = Element::of(e[0].scalar->inverse());
        return q(y) && eq(mul(e[0], y), one());
    }
    case 9:
        return !q(add(e[0], e[1])) && !q(mul(e[0], e[1]));
    case 10:
        return eq(add(e[0], e[1]), add(e[1], e[0]));
    case 11:
        return eq(mul(e[0], e[0]), zero_star());
    case 12:
        return eq(add(add(e[0], e[1]), e[2]), add(e[0], add(e[1], e[2])));
    case 13:
        return eq(add(e[0], zero_star()), e[0]);
    case 14: {
        const Element y = Element::of(-e[0].carrier);
        return !q(y) && eq(add(e[0], y), zero_star());
    }
    case 15: {
        const Element s = add(add(mul(mul(e[0], e[1]), e[2]), mul(mul(e[1], e[2]), e[0])), mul(mul(e[2], e[0]), e[1]));
        return eq(s, zero_star());
    }
    case 16:
        return eq(mul(e[0], add(e[1], e[2])), add(mul(e[0], e[1]), mul(e[0], e[2])));
    case 17:
        return !q(mul(e[0], e[1]));
    case 18: {
        const Element a = mul(e[0], mul(e[1], e[2]));
        const Element b = mul(mul(e[0], e[1]), e[2]);
        const Element c = mul(e[1], mul(e[0], e[2]));
        return eq(a, b) && eq(b, c);
    }
    case 19:
        return eq(mul(mul(e[0], e[1]), e[2]), mul(e[0], mul(e[1], e[2])));
    case 20:
        return eq(mul(add(e[0], e[1]), e[2]), add(mul(e[0], e[2]), mul(e[1], e[2])));
    case 21:
        return !q(Element::of(star(w.l_elements[0])));
    case 22: {
        const auto& a = w.l_elements[0];
        const auto& b = w.l_elements[1];
        return a == b || !(star(a) == star(b));
    }
    case 23: {
        const auto& a = w.l_elements[0];
        const auto& b = w.l_elements[1];
        const Vector sa = star(a), sb = star(b);
        return star(a + b) == sa + sb && star(m_.source.bracket(a, b)) == m_.carrier.bracket(sa, sb);
    }
    case 24: {
        const long mult = *w.multiple;
        if (mult < 1)
            throw EncodingError("axiom 24 needs m >= 1");
        Element sum = zero();
        for (long i = 0; i < mult; ++i)
            sum = add(sum, e[0]);
        return !eq(sum, zero()) || eq(e[0], zero());
    }
    case 25: {
        const Vector& x = e[0].carrier;
        if (m_.L_basis.empty())
            return is_zero(x);
        return solve(Matrix::from_columns(m_.scalars, m_.carrier.dim(), m_.L_basis), x).has_value();
    }
    default:
        return true;
    }
}

struct Domains {
    std::vector<Element> scalars, scalars_ext, carriers, carriers_ext;
    std::vector<Vector> labels;
};

Domains structural_domains(const TwoSortedStructure& m) {
    Domains d;
    const NumberField& f = m.scalars;
    d.scalars.push_back(Element::of(f.zero()));
    d.scalars.push_back(Element::of(f.one()));
    FieldElement p = f.generator();
    FieldElement total = f.one();
    for (std::size_t i = 1; i < f.degree(); ++i) {
        d.scalars.push_back(Element::of(p));
        total += p;
        p *= f.generator();
    }
    d.scalars_ext = d.scalars;
    for (std::size_t i = 2; i < d.scalars.size(); ++i)
        d.scalars_ext.push_back(Element::of(f.one() + *d.scalars[i].scalar));
    d.scalars_ext.push_back(Element::of(total));
    d.scalars_ext.push_back(Element::of(-f.one()));
    d.scalars_ext.push_back(Element::of(f.from_rational(2)));

    const std::size_t k = m.carrier.dim();
    d.carriers.push_back(Element::of(m.carrier.zero()));
    for (std::size_t i = 0; i < k; ++i)
        d.carriers.push_back(Element::of(m.carrier.basis_vector(i)));
    d.carriers_ext = d.carriers;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            d.carriers_ext.push_back(Element::of(m.carrier.basis_vector(i) + m.carrier.basis_vector(j)));
    for (const auto& c : m.constants)
        d.labels.push_back(c.coords);
    return d;
}

// Calls visit on every tuple of the product; stops when visit returns false.
void for_each_tuple(const std::vector<const std::vector<Element>*>& doms, const std::function<bool(const std::vector<Element>&)>& visit) {
    std::vector<Element> tuple;
    std::function<bool(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == doms.size())
            return visit(tuple);
        for (const auto& x : *doms[pos]) {
            tuple.push_back(x);
            const bool go = rec(pos + 1);
            tuple.pop_back();
            if (!go)
                return false;
        }
        return true;
    };
    rec(0);
}

AxiomVerdict structural(const Model& model, const Domains& dom, int id) {
    const TwoSortedStructure& m = model.structure();
    AxiomVerdict v{id, CheckMode::structural, true, 0, std::nullopt};
    const auto test = [&](Witness w) {
        ++v.instances;
        if (model.holds(id, w))
            return true;
        v.passed = false;
        v.witness = std::move(w);
        return false;
    };

    if (l_arity(id) > 0) {
        const std::size_t arity = l_arity(id);
        for (std::size_t a = 0; a < dom.labels.size() && v.passed; ++a) {
            if (arity == 1) {
                test({{}, {dom.labels[a]}, std::nullopt});
                continue;
            }
            for (std::size_t b = 0; b < dom.labels.size() && v.passed; ++b)
                test({{}, {dom.labels[a], dom.labels[b]}, std::nullopt});
        }
        // Injectivity of the linear extension covers a* != b* beyond the labels.
        if (id == 22 && v.passed) {
            const NumberField& q = NumberField::rationals();
            const std::size_t n = m.source.dim();
            std::vector<Vector> images;
            for (std::size_t i = 0; i < n; ++i)
                images.push_back(restrict_vector(model.star(unit_vector(q, n, i))));
            const Subspace ker = kernel(Matrix::from_columns(q, m.carrier.dim() * m.scalars.degree(), images));
            if (ker.is_zero())
                ++v.instances;
            else
                test({{}, {ker.basis_vectors().front(), zero_vector(q, n)}, std::nullopt});
        }
        return v;
    }

    const auto& sig = kSignature[static_cast<std::size_t>(id)];
    const bool unary = sig.size() == 1;
    std::vector<Element> any = dom.scalars;
    any.insert(any.end(), dom.carriers.begin(), dom.carriers.end());
    std::vector<Element> any_ext = dom.scalars_ext;
    any_ext.insert(any_ext.end(), dom.carriers_ext.begin(), dom.carriers_ext.end());
    std::vector<const std::vector<Element>*> doms;
    for (const auto s : sig) {
        if (s == Sort::scalar)
            doms.push_back(unary ? &dom.scalars_ext : &dom.scalars);
        else if (s == Sort::carrier)
            doms.push_back(unary ? &dom.carriers_ext : &dom.carriers);
        else
            doms.push_back(unary ? &any_ext : &any);
    }
    if (id == 24) {
        for (long mult = 1; mult <= 10 && v.passed; ++mult)
            for_each_tuple(doms, [&](const std::vector<Element>& t) { return test({t, {}, mult}); });
        return v;
    }
    for_each_tuple(doms, [&](const std::vector<Element>& t) { return test({t, {}, std::nullopt}); });
    return v;
}

AxiomVerdict sampled(const Model& model, int id, std::size_t samples, std::uint64_t seed) {
    const TwoSortedStructure& m = model.structure();
    const NumberField& q = NumberField::rationals();
    // Each axiom gets its own stream so verdicts do not depend on which
    // other axioms were checked.
    Sampler sampler(seed * 1000003u + static_cast<std::uint64_t>(id));
    AxiomVerdict v{id, CheckMode::sampled, true, 0, std::nullopt};
    const auto draw = [&](Sort s) {
        if (s == Sort::any)
            s = sampler.integer(0, 1) == 0 ? Sort::scalar : Sort::carrier;
        return s == Sort::scalar ? Element::of(sampler.element(m.scalars))
                                 : Element::of(sampler.vector(m.scalars, m.carrier.dim()));
    };
    for (std::size_t s = 0; s < samples; ++s) {
        Witness w;
        for (const auto sort : kSignature[static_cast<std::size_t>(id)])
            w.elements.push_back(draw(sort));
        for (std::size_t i = 0; i < l_arity(id); ++i)
            w.l_elements.push_back(sampler.vector(q, m.source.dim()));
        if (id == 24)
            w.multiple = sampler.integer(1, 10);
        ++v.instances;
        if (!model.holds(id, w)) {
            v.passed = false;
            v.witness = std::move(w);
            break;
        }
    }
    return v;
}

std::string element_string(const Element& e) {
    return e.is_scalar() ? "s:" + e.scalar->str() : "k:" + to_string(e.carrier);
}

} // namespace

TwoSortedStructure make_structure(const Completion& completion) {
    const LieAlgebra& src = completion.tensor.source;
    const NumberField& q = NumberField::rationals();
    TwoSortedStructure m{completion.tensor.field, completion.K, src, {}, {}};
    for (std::size_t i = 0; i < src.dim(); ++i) {
        Vector col = completion.embedding.column(i);
        m.constants.push_back({src.basis_names()[i], unit_vector(q, src.dim(), i), col});
        m.L_basis.push_back(std::move(col));
    }
    return m;
}

void check_structure(const TwoSortedStructure& m) {
    if (!m.source.field().is_rationals())
        throw EncodingError("the designated subalgebra must be over Q");
    if (!(m.carrier.field() == m.scalars))
        throw EncodingError("carrier is not over the scalar field");
    const auto carrier_vector = [&](const Vector& v) {
        if (v.size() != m.carrier.dim())
            return false;
        for (const auto& x : v)
            if (!(x.field() == m.scalars))
                return false;
        return true;
    };
    std::set<std::string> labels;
    std::vector<Vector> coords;
    for (const auto& c : m.constants) {
        if (!labels.insert(c.label).second)
            throw EncodingError("duplicate constant label '" + c.label + "'");
        if (c.coords.size() != m.source.dim() || !carrier_vector(c.value))
            throw EncodingError("constant '" + c.label + "' has the wrong length");
        for (const auto& x : c.coords)
            if (!x.field().is_rationals())
                throw EncodingError("constant '" + c.label + "' must have rational coordinates");
        coords.push_back(c.coords);
    }
    if (Subspace::span(NumberField::rationals(), m.source.dim(), coords).dim() != m.source.dim())
        throw EncodingError("constants do not cover a basis of L");
    for (const auto& v : m.L_basis)
        if (!carrier_vector(v))
            throw EncodingError("L_basis vector has the wrong length");
}

std::string to_string(const Witness& w) {
    std::string out = "(";
    bool first = true;
    const auto sep = [&] {
        if (!first)
            out += "; ";
        first = false;
    };
    for (const auto& e : w.elements) {
        sep();
        out += element_string(e);
    }
    for (const auto& a : w.l_elements) {
        sep();
        out += "L:" + to_string(a);
    }
    if (w.multiple) {
        sep();
        out += "m=" + std::to_string(*w.multiple);
    }
    return out + ")";
}

std::string to_string(CheckMode mode) { return mode == CheckMode::structural ? "structural" : "sampled"; }

std::vector<AxiomVerdict> check_axioms(const TwoSortedStructure& m, CheckMode mode, std::size_t samples,
                                       std::uint64_t seed) {
    if (mode == CheckMode::sampled && samples == 0)
        throw EncodingError("sampled mode needs at least one sample");
    const Model model(m);
    const Domains dom = structural_domains(m);
    std::vector<AxiomVerdict> out;
    for (int id = 1; id <= kAxiomCount; ++id)
        out.push_back(mode == CheckMode::structural ? structural(model, dom, id) : sampled(model, id, samples, seed));
    return out;
}

bool evaluate_axiom(const TwoSortedStructure& m, int axiom_id, const Witness& w) {
    return Model(m).holds(axiom_id, w);
}

std::string counterexample_note() {
    return "NOTE (non-checkable): the class of fields E over which a fixed finite-dimensional rational Lie\n"
           "algebra L is an E-Lie algebra is not first-order axiomatizable. The argument is metatheoretic:\n"
           "a theory with the model Q would also have models of every infinite cardinality, while\n"
           "dim_Q L = [E:Q] * dim_E L with a finite left-hand side forces [E:Q] to be finite.\n"
           "No finite structure witnesses this, so nothing is evaluated.";
}

} // namespace liecomp
