#include "liecomp/lie_library.hpp"

#include "liecomp/error.hpp"

#include <charconv>
#include <utility>
#include <vector>

namespace liecomp {

LieAlgebra abelian(std::size_t n, const NumberField& field) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("a" + std::to_string(i + 1));
    return LieAlgebra(field, n, {}, std::move(names));
}

LieAlgebra heisenberg(const NumberField& field) {
    return LieAlgebra(field, 3, {{0, 1, unit_vector(field, 3, 2)}}, {"x", "y", "z"});
}

LieAlgebra sl2(const NumberField& field) {
    const Rational two = 2;
    return LieAlgebra(field, 3,
                      {{0, 1, unit_vector(field, 3, 2)},
                       {0, 2, -two * unit_vector(field, 3, 0)},
                       {1, 2, two * unit_vector(field, 3, 1)}},
                      {"e", "f", "h"});
}

LieAlgebra n_plus(std::size_t n, const NumberField& field) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            idx.emplace_back(i, j);
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    const std::size_t dim = idx.size();
    if (dim == 0)
        throw EncodingError("n_plus(n) needs n >= 2");
    const auto find = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < dim; ++k)
            if (idx[k] == std::pair{i, j})
                return k;
        throw InternalInvariantViolation("missing matrix unit");
    };
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            const auto [i, j] = idx[a];
            const auto [k, l] = idx[b];
            Vector v = zero_vector(field, dim);
            if (j == k)
                v[find(i, l)] += field.one();
            if (l == i)
                v[find(k, j)] -= field.one();
            if (!is_zero(v))
                entries.push_back({a, b, std::move(v)});
        }
    return LieAlgebra(field, dim, std::move(entries), std::move(names));
}

LieAlgebra make_algebra(AlgebraName name, const NumberField& field, std::size_t n) {
    switch (name) {
    case AlgebraName::abelian:
        return abelian(n, field);
    case AlgebraName::heisenberg:
        return heisenberg(field);
    case AlgebraName::sl2:
        return sl2(field);
    case AlgebraName::n_plus:
        return n_plus(n, field);
    }
    throw EncodingError("unknown algebra");
}

LieAlgebra make_algebra(const std::string& spec, const NumberField& field) {
    const auto open = spec.find('(');
    const std::string base = spec.substr(0, open);
    std::size_t n = 0;
    if (open != std::string::npos) {
        const auto close = spec.find(')', open);
        if (close == std::string::npos)
            throw ParseError("malformed algebra name '" + spec + "'");
        const auto arg = spec.substr(open + 1, close - open - 1);
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
        if (ec != std::errc() || ptr != arg.data() + arg.size())
            throw ParseError("malformed algebra size in '" + spec + "'");
    }
    if (base == "abelian" && n > 0)
        return abelian(n, field);
    if (base == "heisenberg")
        return heisenberg(field);
    if (base == "sl2")
        return sl2(field);
    if (base == "n_plus" && n >= 2)
        return n_plus(n, field);
    throw ParseError("unknown algebra '" + spec + "'");
}

} // namespace liecomp
