#pragma once

#include "liecomp/number_field.hpp"
#include "liecomp/matrix.hpp"

#include <cstdint>
#include <random>

namespace liecomp {

// All sampling goes through std::minstd_rand: x <- 48271 x mod (2^31 - 1).
// Its sequence is fixed by the standard, and draws are mapped to ranges by
// plain modulo instead of the library distributions (whose output is
// implementation-defined), so reports are bit-reproducible. A seed of 0 is
// replaced by 1 as minstd_rand requires.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed)
        : engine_(static_cast<std::minstd_rand::result_type>(seed % 2147483647u == 0 ? 1 : seed % 2147483647u)) {}

    // Uniform-ish integer in [lo, hi].
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    // Integer coefficients in [-range, range] on every power of the generator.
    FieldElement element(const NumberField& field, long range = 3) {
        std::vector<Rational> c(field.degree());
        for (auto& x : c)
            x = integer(-range, range);
        return field.element(std::move(c));
    }

    Vector vector(const NumberField& field, std::size_t n, long range = 3) {
        Vector v;
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(element(field, range));
        return v;
    }

    Vector nonzero_vector(const NumberField& field, std::size_t n, long range = 3) {
        for (;;) {
            Vector v = vector(field, n, range);
            if (!is_zero(v))
                return v;
        }
    }

    FieldElement nonzero_element(const NumberField& field, long range = 3) {
        for (;;) {
            FieldElement x = element(field, range);
            if (!x.is_zero())
                return x;
        }
    }

private:
    std::minstd_rand engine_;
};

} // namespace liecomp
