#include "liecomp/completion.hpp"

#include "liecomp/error.hpp"
#include "liecomp/rng.hpp"

namespace liecomp {

Vector Completion::project(const Vector& v) const {
    const Vector r = N.reduce(v);
    Vector out;
    out.reserve(complement.size());
    for (const auto c : complement)
        out.push_back(r[c]);
    return out;
}

Subspace Completion::project(const Subspace& s) const {
    std::vector<Vector> vecs;
    for (const auto& b : s.basis_vectors())
        vecs.push_back(project(b));
    return Subspace::span(tensor.field, complement.size(), vecs);
}

Completion quotient_completion(const TensorAlgebra& tensor, const Subspace& N) {
    const EntanglementReport ent = is_entangled(tensor, N);
    if (!ent.entangled)
        throw NotEntangled("N meets 1 (x) L in 1 (x) (" + to_string(*ent.witness) + ")");

    const NumberField& field = tensor.field;
    const LieAlgebra& big = tensor.algebra;
    std::vector<std::size_t> complement = N.non_pivots();
    const std::size_t k = complement.size();

    // Brackets of coset representatives, reduced mod N.
    Completion c{tensor, N, complement, LieAlgebra(field, k, {}), Matrix(field, k, tensor.source.dim())};
    std::vector<BracketEntry> entries;
    std::vector<std::string> names;
    for (std::size_t p = 0; p < k; ++p) {
        names.push_back(big.basis_names()[complement[p]]);
        for (std::size_t q = p + 1; q < k; ++q) {
            Vector v = c.project(big.bracket_basis(complement[p], complement[q]));
            if (!is_zero(v))
                entries.push_back({p, q, std::move(v)});
        }
    }
    c.K = LieAlgebra(field, k, std::move(entries), std::move(names));

    std::vector<Vector> cols;
    std::vector<Vector> restricted;
    for (std::size_t j = 0; j < tensor.source.dim(); ++j) {
        cols.push_back(c.project(big.basis_vector(j)));
        restricted.push_back(restrict_vector(cols.back()));
    }
    c.embedding = Matrix::from_columns(field, k, cols);

    const std::size_t q_rank = Subspace::span(NumberField::rationals(), k * field.degree(), restricted).dim();
    if (q_rank != tensor.source.dim())
        throw InternalInvariantViolation("embedding of an entangled quotient is not injective");
    if (rank(c.embedding) != k)
        throw InternalInvariantViolation("embedded copy does not span the quotient over E");
    return c;
}

TwistData identity_twist(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim() * algebra.field().degree();
    const NumberField& q = NumberField::rationals();
    return {Subspace::full(q, n), Matrix::identity(q, n), FieldAutomorphism::identity(algebra.field())};
}

namespace {

void check_twist(const LieAlgebra& lq, const TwistData& twist, const NumberField& field) {
    const std::size_t n = lq.dim();
    if (!twist.I.field().is_rationals() || !twist.f.field().is_rationals())
        throw FieldMismatch();
    if (!(twist.sigma.field() == field))
        throw FieldMismatch();
    if (twist.I.ambient_dim() != n || twist.f.rows() != n || twist.f.cols() != n)
        throw AmbientMismatch();
    if (!is_ideal(lq, twist.I))
        throw NotAnIdeal("I is not an ideal of the restricted algebra");
    const HomomorphismReport hom = check_homomorphism({lq, lq, twist.f}, HomomorphismMode::automorphism);
    if (!hom.ok)
        throw NotAnAutomorphism("f is not an automorphism: " + hom.failure);
}

} // namespace

TwistedIdeal twisted_ideal(const LieAlgebra& algebra, const TwistData& twist) {
    const NumberField& field = algebra.field();
    const NumberField& q = NumberField::rationals();
    const std::size_t d = field.degree();
    const LieAlgebra lq = restrict_scalars(algebra);
    const std::size_t n = lq.dim();
    check_twist(lq, twist, field);

    TwistedIdeal out{tensor_product(field, lq), Subspace(field, n)};
    const std::vector<Vector> gens = twist.I.basis_vectors();
    const std::size_t r = gens.size();
    if (r == 0)
        return out;

    // Q-linear map Q^(r*d) -> Q^n: coordinate (k, t) is the coefficient of
    // l^t on b_k, sent to sigma(l^t) f(b_k) in L_Q.
    std::vector<FieldElement> sigma_powers;
    FieldElement p = field.one();
    for (std::size_t t = 0; t < d; ++t) {
        sigma_powers.push_back(twist.sigma(p));
        p *= field.generator();
    }
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < r; ++k) {
        const Vector fb = extend_vector(field, twist.f.apply(gens[k]));
        for (std::size_t t = 0; t < d; ++t)
            cols.push_back(restrict_vector(sigma_powers[t] * fb));
    }
    const Subspace ker = kernel(Matrix::from_columns(q, n, cols));

    std::vector<Vector> elems;
    for (const auto& y : ker.basis_vectors()) {
        Vector w = zero_vector(field, n);
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<Rational> coeffs(d);
            for (std::size_t t = 0; t < d; ++t)
                coeffs[t] = y[k * d + t][0];
            axpy(w, field.element(std::move(coeffs)), as_constants(field, gens[k]));
        }
        elems.push_back(std::move(w));
    }
    out.N = Subspace::span(field, n, elems);

    if (!is_ideal(out.tensor.algebra, out.N))
        throw InternalInvariantViolation("N(I, f, sigma) is not an ideal");
    if (!is_entangled(out.tensor, out.N).entangled)
        throw InternalInvariantViolation("N(I, f, sigma) is not entangled");
    return out;
}

Completion twisted_completion(const LieAlgebra& algebra, const TwistData& twist) {
    const TwistedIdeal t = twisted_ideal(algebra, twist);
    return quotient_completion(t.tensor, t.N);
}

Subspace conjugate_subspace(const Subspace& N, const Matrix& f, const FieldAutomorphism& sigma) {
    if (!(sigma.field() == N.field()))
        throw FieldMismatch();
    if (f.cols() != N.ambient_dim())
        throw AmbientMismatch();
    const Matrix fe = as_constants(N.field(), f);
    std::vector<Vector> vecs;
    for (const auto& w : N.basis_vectors())
        vecs.push_back(fe.apply(apply_automorphism(sigma, w)));
    return Subspace::span(N.field(), f.rows(), vecs);
}

ScalarActionReport verify_scalar_action(const LieAlgebra& algebra, const TwistData& twist, std::uint64_t seed) {
    const NumberField& field = algebra.field();
    const std::size_t n = algebra.dim() * field.degree();
    if (twist.I.dim() != n)
        throw NotAnIdeal("the scalar action formula needs I = L");
    const Completion c = twisted_completion(algebra, twist);
    const auto f_inv = inverse(twist.f);
    if (!f_inv)
        throw NotAnAutomorphism("f is singular");

    Sampler sampler(seed);
    const std::vector<FieldElement> scalars{field.one(), field.generator(), sampler.nonzero_element(field)};
    const NumberField& q = NumberField::rationals();

    ScalarActionReport rep;
    for (std::size_t a = 0; a < n; ++a) {
        const Vector ea = unit_vector(q, n, a);
        for (const auto& x : scalars) {
            Vector lhs = c.project(x * as_constants(field, ea));
            const Vector moved = restrict_vector(twist.sigma(x) * extend_vector(field, twist.f.apply(ea)));
            Vector rhs = c.embed(f_inv->apply(moved));
            const bool ok = lhs == rhs;
            rep.checks.push_back({a, x, std::move(lhs), std::move(rhs), ok});
            if (!ok && !rep.first_failure) {
                rep.ok = false;
                rep.first_failure = rep.checks.size() - 1;
            }
        }
    }
    // Every coset is some a-bar: the Q-image of a -> a-bar fills K over Q.
    std::vector<Vector> images;
    for (std::size_t j = 0; j < n; ++j)
        images.push_back(restrict_vector(c.embedding.column(j)));
    rep.surjective = Subspace::span(q, c.K.dim() * field.degree(), images).dim() == c.K.dim() * field.degree();
    rep.ok = rep.ok && rep.surjective;
    return rep;
}

namespace {

bool images_match(const Completion& c, const SeriesReport& src, const SeriesReport& dst, std::string& failure) {
    if (src.terms.size() != dst.terms.size()) {
        failure = to_string(src.kind) + " series lengths differ";
        return false;
    }
    for (std::size_t i = 0; i < src.terms.size(); ++i) {
        const Subspace img = c.project(extend_subspace(c.tensor.field, src.terms[i]));
        if (!(img == dst.terms[i])) {
            failure = to_string(src.kind) + " term " + std::to_string(i) + " differs from the image of its source";
            return false;
        }
    }
    return true;
}

} // namespace

PreservationReport preservation_check(const Completion& completion) {
    const LieAlgebra& l = completion.tensor.source;
    const LieAlgebra& k = completion.K;
    PreservationReport rep{series(l, SeriesKind::lower_central), series(l, SeriesKind::derived),
                           series(k, SeriesKind::lower_central), series(k, SeriesKind::derived), false, false, false,
                           std::nullopt};
    rep.class_equal = rep.source_lower.class_or_length == rep.quotient_lower.class_or_length;
    rep.length_equal = rep.source_derived.class_or_length == rep.quotient_derived.class_or_length;
    std::string failure;
    rep.images_equal = images_match(completion, rep.source_lower, rep.quotient_lower, failure) &&
                       images_match(completion, rep.source_derived, rep.quotient_derived, failure);
    if (!rep.class_equal)
        rep.failure = "nilpotency class differs";
    else if (!rep.length_equal)
        rep.failure = "derived length differs";
    else if (!rep.images_equal)
        rep.failure = failure;
    return rep;
}

} // namespace liecomp
