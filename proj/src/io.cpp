#include "liecomp/io.hpp"

#include "liecomp/error.hpp"
#include "liecomp/lie_structure.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace liecomp {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw EncodingError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw EncodingError(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

Rational rational_from_json(const Json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    throw EncodingError("expected a rational string");
}

} // namespace

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

NumberField field_from_json(const Json& j, std::size_t max_degree) {
    const Json& kind = require(j, "kind");
    if (kind == "rational")
        return NumberField::rationals();
    if (kind != "number_field")
        throw EncodingError("field kind must be 'rational' or 'number_field'");
    const Json& mp = require(j, "minpoly");
    if (!mp.is_array() || mp.size() < 2)
        throw EncodingError("minpoly must list at least two coefficients");
    std::vector<Rational> coeffs;
    for (const auto& c : mp)
        coeffs.push_back(rational_from_json(c));
    Polynomial p(std::move(coeffs));
    if (p.degree() + 1 != static_cast<long>(mp.size()) || !p.is_monic())
        throw EncodingError("minpoly must be monic with its leading coefficient last");
    if (p == Polynomial{0, 1})
        return NumberField::rationals();
    return NumberField(p, max_degree);
}

Json to_json(const NumberField& field) {
    if (field.is_rationals())
        return Json{{"kind", "rational"}};
    Json coeffs = Json::array();
    for (std::size_t i = 0; i <= field.degree(); ++i)
        coeffs.push_back(to_string(field.minpoly().coeff(i)));
    return Json{{"kind", "number_field"}, {"minpoly", coeffs}};
}

Polynomial parse_coefficient_list(const std::string& text) {
    std::vector<Rational> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        coeffs.push_back(parse_rational(item));
    if (coeffs.empty())
        throw ParseError("empty coefficient list");
    return Polynomial(std::move(coeffs));
}

FieldElement element_from_json(const Json& j, const NumberField& field) {
    if (j.is_string() || j.is_number_integer())
        return field.from_rational(rational_from_json(j));
    if (!j.is_array())
        throw EncodingError("field element must be a rational string or an array");
    if (j.size() != field.degree())
        throw EncodingError("field element has " + std::to_string(j.size()) + " coefficients, expected " +
                            std::to_string(field.degree()));
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(rational_from_json(c));
    return field.element(std::move(coeffs));
}

Json to_json(const FieldElement& x) {
    if (x.field().degree() == 1)
        return to_string(x[0]);
    Json a = Json::array();
    for (const auto& c : x.coeffs())
        a.push_back(to_string(c));
    return a;
}

Vector vector_from_json(const Json& j, const NumberField& field, std::size_t length) {
    if (!j.is_array() || j.size() != length)
        throw EncodingError("vector must have " + std::to_string(length) + " entries");
    Vector v;
    for (const auto& x : j)
        v.push_back(element_from_json(x, field));
    return v;
}

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Matrix matrix_from_json(const Json& j, const NumberField& field, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw EncodingError("matrix must have " + std::to_string(rows) + " rows");
    std::vector<Vector> r;
    for (const auto& row : j)
        r.push_back(vector_from_json(row, field, cols));
    return Matrix::from_rows(field, cols, r);
}

Json to_json(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

LieAlgebra algebra_from_json(const Json& j, std::size_t max_degree) {
    const NumberField field = field_from_json(require(j, "field"), max_degree);
    const std::size_t n = as_index(require(j, "dim"), "dim");
    if (n == 0)
        throw EncodingError("dim must be positive");
    std::vector<std::string> names;
    if (j.contains("basis_names")) {
        const Json& bn = j.at("basis_names");
        if (!bn.is_array() || bn.size() != n)
            throw EncodingError("basis_names must list dim names");
        for (const auto& s : bn) {
            if (!s.is_string())
                throw EncodingError("basis names must be strings");
            names.push_back(s.get<std::string>());
        }
    }
    std::vector<BracketEntry> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const Json& br = j.contains("brackets") ? j.at("brackets") : Json::array();
    if (!br.is_array())
        throw EncodingError("brackets must be an array");
    for (const auto& e : br) {
        const std::size_t i = as_index(require(e, "i"), "i");
        const std::size_t k_j = as_index(require(e, "j"), "j");
        if (i >= k_j)
            throw EncodingError("bracket entries need i < j (got " + std::to_string(i) + ", " + std::to_string(k_j) + ")");
        if (k_j >= n)
            throw EncodingError("bracket index " + std::to_string(k_j) + " out of range");
        if (!seen.insert({i, k_j}).second)
            throw EncodingError("bracket (" + std::to_string(i) + ", " + std::to_string(k_j) + ") listed twice");
        Vector value = zero_vector(field, n);
        std::set<std::size_t> ks;
        const Json& val = require(e, "value");
        if (!val.is_array())
            throw EncodingError("bracket value must be an array");
        for (const auto& term : val) {
            const std::size_t k = as_index(require(term, "k"), "k");
            if (k >= n)
                throw EncodingError("bracket component " + std::to_string(k) + " out of range");
            if (!ks.insert(k).second)
                throw EncodingError("component k = " + std::to_string(k) + " listed twice");
            value[k] = element_from_json(require(term, "coeff"), field);
        }
        entries.push_back({i, k_j, std::move(value)});
    }
    return LieAlgebra(field, n, std::move(entries), std::move(names));
}

Json to_json(const LieAlgebra& algebra) {
    Json brackets = Json::array();
    for (const auto& e : algebra.entries()) {
        Json value = Json::array();
        for (std::size_t k = 0; k < e.value.size(); ++k)
            if (!e.value[k].is_zero())
                value.push_back(Json{{"k", k}, {"coeff", to_json(e.value[k])}});
        brackets.push_back(Json{{"i", e.i}, {"j", e.j}, {"value", value}});
    }
    return Json{{"field", to_json(algebra.field())},
                {"dim", algebra.dim()},
                {"basis_names", algebra.basis_names()},
                {"brackets", brackets}};
}

TwistData twist_from_json(const Json& j, const LieAlgebra& algebra) {
    if (!j.is_object())
        throw EncodingError("twist must be an object");
    const NumberField& field = algebra.field();
    const NumberField& q = NumberField::rationals();
    const LieAlgebra lq = restrict_scalars(algebra);
    const std::size_t n = lq.dim();
    TwistData t = identity_twist(algebra);

    const Json& gens = require(j, "ideal_gens");
    if (gens == "all")
        t.I = Subspace::full(q, n);
    else if (gens == "zero")
        t.I = Subspace(q, n);
    else if (gens == "center")
        t.I = center(lq);
    else if (gens.is_array()) {
        std::vector<Vector> vecs;
        for (const auto& g : gens)
            vecs.push_back(vector_from_json(g, q, n));
        t.I = Subspace::span(q, n, vecs);
    } else
        throw EncodingError("ideal_gens must be an array of vectors or one of all, center, zero");

    if (j.contains("f_matrix"))
        t.f = matrix_from_json(j.at("f_matrix"), q, n, n);
    if (j.contains("sigma_root")) {
        const FieldElement root = element_from_json(j.at("sigma_root"), field);
        if (!evaluate(field.minpoly(), root).is_zero())
            throw EncodingError("sigma_root " + root.str() + " is not a root of the minimal polynomial");
        t.sigma = FieldAutomorphism(field, root);
    }
    return t;
}

Json to_json(const Completion& completion) {
    Json j = to_json(completion.K);
    j["embedding"] = to_json(completion.embedding);
    Json nb = Json::array();
    for (const auto& v : completion.N.basis_vectors())
        nb.push_back(to_json(v));
    j["N_basis"] = nb;
    j["source"] = to_json(completion.tensor.source);
    Json constants = Json::object();
    const auto& names = completion.tensor.source.basis_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        constants[names[i]] = to_json(completion.embedding.column(i));
    j["constants"] = constants;
    return j;
}

TwoSortedStructure structure_from_json(const Json& j, std::size_t max_degree) {
    const LieAlgebra carrier = algebra_from_json(j, max_degree);
    const LieAlgebra source = algebra_from_json(require(j, "source"), max_degree);
    if (!source.field().is_rationals())
        throw EncodingError("source must be an algebra over Q");
    const NumberField& field = carrier.field();
    const NumberField& q = NumberField::rationals();
    TwoSortedStructure m{field, carrier, source, {}, {}};

    const Json& constants = require(j, "constants");
    if (!constants.is_object())
        throw EncodingError("constants must be an object");
    const Json coords = j.contains("constant_coords") ? j.at("constant_coords") : Json::object();
    for (const auto& [label, value] : constants.items()) {
        Vector c;
        if (coords.contains(label)) {
            c = vector_from_json(coords.at(label), q, source.dim());
        } else {
            const auto& names = source.basis_names();
            const auto it = std::find(names.begin(), names.end(), label);
            if (it == names.end())
                throw EncodingError("constant '" + label + "' is neither a source basis name nor in constant_coords");
            c = unit_vector(q, source.dim(), static_cast<std::size_t>(it - names.begin()));
        }
        m.constants.push_back({label, std::move(c), vector_from_json(value, field, carrier.dim())});
    }
    if (j.contains("L_basis")) {
        for (const auto& v : j.at("L_basis"))
            m.L_basis.push_back(vector_from_json(v, field, carrier.dim()));
    } else {
        const Matrix emb = matrix_from_json(require(j, "embedding"), field, carrier.dim(), source.dim());
        for (std::size_t i = 0; i < source.dim(); ++i)
            m.L_basis.push_back(emb.column(i));
    }
    check_structure(m);
    return m;
}

} // namespace liecomp
