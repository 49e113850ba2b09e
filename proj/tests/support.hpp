#pragma once

#include "liecomp/lie_library.hpp"
#include "liecomp/number_field.hpp"
#include "oracle/naive.hpp"

#include <string>

namespace testing {

inline liecomp::NumberField qsqrt2() { return liecomp::NumberField(liecomp::Polynomial{-2, 0, 1}); }
inline liecomp::NumberField qcbrt2() { return liecomp::NumberField(liecomp::Polynomial{-2, 0, 0, 1}); }

inline liecomp::FieldElement elem(const liecomp::NumberField& f, std::vector<long> c) {
    std::vector<liecomp::Rational> r(c.begin(), c.end());
    r.resize(f.degree());
    return f.element(std::move(r));
}

inline liecomp::Vector qvec(std::vector<long> c) {
    liecomp::Vector v;
    for (long x : c)
        v.push_back(liecomp::NumberField::rationals().from_rational(x));
    return v;
}

inline oracle::Row rats(const liecomp::Vector& v) {
    oracle::Row r;
    for (const auto& x : v)
        r.push_back(x[0]);
    return r;
}

// Structure constants of an algebra over Q as an oracle cube.
inline oracle::Cube cube_of(const liecomp::LieAlgebra& l) {
    const std::size_t n = l.dim();
    oracle::Cube c = oracle::zero_cube(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                c[i][j][k] = l.bracket_basis(i, j)[k][0];
    return c;
}

inline std::string data_path(const std::string& name) { return std::string(LIECOMP_DATA_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(LIECOMP_GOLDEN_DIR) + "/" + name; }

} // namespace testing
