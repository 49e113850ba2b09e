#include "liecomp/tensor.hpp"

#include "liecomp/error.hpp"
#include "liecomp/lie_structure.hpp"

namespace liecomp {

TensorAlgebra tensor_product(const NumberField& field, const LieAlgebra& source) {
    if (!source.field().is_rationals())
        throw FieldMismatch();
    const std::size_t n = source.dim();
    const std::size_t d = field.degree();
    const NumberField& q = NumberField::rationals();
    std::vector<Vector> ones;
    for (std::size_t i = 0; i < n; ++i)
        ones.push_back(unit_vector(q, n * d, i * d));
    return {field, source, extend_scalars(source, field), Subspace::span(q, n * d, ones)};
}

Vector one_tensor(const TensorAlgebra& tensor, const Vector& a) { return as_constants(tensor.field, a); }

EntanglementReport is_entangled(const TensorAlgebra& tensor, const Subspace& N) {
    if (!(N.field() == tensor.field))
        throw FieldMismatch();
    if (N.ambient_dim() != tensor.algebra.dim())
        throw AmbientMismatch();
    if (!is_ideal(tensor.algebra, N))
        throw NotAnIdeal("N is not closed under brackets with the tensor algebra");
    const Subspace meet = restrict_subspace(N).intersect(tensor.one_tensor_L);
    EntanglementReport rep;
    if (meet.is_zero())
        return rep;
    rep.entangled = false;
    const Vector w = meet.basis_vectors().front();
    const std::size_t d = tensor.field.degree();
    Vector a;
    for (std::size_t i = 0; i < tensor.source.dim(); ++i)
        a.push_back(w[i * d]);
    rep.witness = std::move(a);
    return rep;
}

Vector as_constants(const NumberField& field, const Vector& rational) {
    Vector v;
    v.reserve(rational.size());
    for (const auto& x : rational) {
        if (x.field().degree() != 1)
            throw FieldMismatch();
        v.push_back(field.from_rational(x[0]));
    }
    return v;
}

Matrix as_constants(const NumberField& field, const Matrix& rational) {
    Matrix m(field, rational.rows(), rational.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = field.from_rational(rational(i, j)[0]);
    return m;
}

Vector apply_automorphism(const FieldAutomorphism& sigma, const Vector& v) {
    Vector out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(sigma(x));
    return out;
}

} // namespace liecomp
