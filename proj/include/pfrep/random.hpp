#ifndef PFREP_RANDOM_HPP
#define PFREP_RANDOM_HPP

// Reproducible sampling of scalar ring elements:
//   integers   uniform in [-10, 10]
//   rationals  numerator in [-10, 10], denominator in [1, 10]
//   Z/n        uniform residue in [0, n)

#include <random>
#include <vector>

#include "pfrep/pfaffian.hpp"
#include "pfrep/representation.hpp"
#include "pfrep/ring.hpp"

namespace pfrep {

using Rng = std::mt19937_64;

inline Integer random_element(const IntegerRing&, Rng& rng) {
    return std::uniform_int_distribution<int>(-10, 10)(rng);
}

inline Rational random_element(const RationalRing&, Rng& rng) {
    const int num = std::uniform_int_distribution<int>(-10, 10)(rng);
    const int den = std::uniform_int_distribution<int>(1, 10)(rng);
    return Rational(num, den);
}

inline Residue random_element(const ModularRing& ring, Rng& rng) {
    return {std::uniform_int_distribution<std::uint64_t>(0, ring.modulus() - 1)(rng)};
}

template <CommutativeRing R>
CoefficientVector<R> random_coefficients(const R& ring, int degree, Rng& rng) {
    CoefficientVector<R> cv{degree, {}};
    for (std::size_t k = 0; k < slot_count(degree); ++k) cv.slots.push_back(random_element(ring, rng));
    return cv;
}

template <CommutativeRing R>
SkewMatrix<R> random_skew(const R& ring, std::size_t size, Rng& rng) {
    SkewMatrix<R> m(ring, size);
    for (std::size_t i = 1; i <= size; ++i)
        for (std::size_t j = i + 1; j <= size; ++j) m.set(i, j, random_element(ring, rng));
    return m;
}

template <CommutativeRing R>
SquareMatrix<R> random_square(const R& ring, std::size_t size, Rng& rng) {
    SquareMatrix<R> m(ring, size);
    for (std::size_t i = 1; i <= size; ++i)
        for (std::size_t j = 1; j <= size; ++j) m.set(i, j, random_element(ring, rng));
    return m;
}

}  // namespace pfrep

#endif
