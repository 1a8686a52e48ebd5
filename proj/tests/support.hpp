#ifndef PFREP_TESTS_SUPPORT_HPP
#define PFREP_TESTS_SUPPORT_HPP

// Test-only oracles and generators. Nothing here goes through the memoized
// Pfaffian or the builders' slot tables.

#include <random>
#include <string>
#include <vector>

#include "pfrep/pfrep.hpp"

namespace pfrep::test {

/// Direct recursion along row 1 over explicitly deleted submatrices, with no
/// memoization: (2d-1)!! leaves.
template <CommutativeRing R>
typename R::value_type naive_pfaffian(const SkewMatrix<R>& a) {
    const R& ring = a.ring();
    if (a.size() == 0) return ring.one();
    if (a.size() == 2) return a.upper(1, 2);
    auto sum = ring.zero();
    for (std::size_t j = 2; j <= a.size(); ++j) {
        auto term = ring.mul(a.upper(1, j), naive_pfaffian(delete_rows_cols(a, 1, j)));
        sum = (j % 2 == 0) ? ring.add(sum, term) : ring.sub(sum, term);
    }
    return sum;
}

/// Generic forms written out term by term, in the order the coefficients are
/// usually listed for each degree.
inline std::string generic_form_text(int d) {
    switch (d) {
        case 1: return "T1*x + T2*y + T3*z";
        case 2: return "T1*x^2 + T2*y^2 + T3*z^2 + T4*x*y + T5*x*z + T6*y*z";
        case 3:
            return "T1*x^3 + T2*y^3 + T3*z^3 + T4*x^2*y + T5*x*y^2 + T6*x^2*z + T7*x*z^2 + T8*y^2*z + T9*y*z^2 + "
                   "T10*x*y*z";
        case 4:
            return "T1*x^4 + T2*y^4 + T3*z^4 + T4*x^3*y + T5*x^2*y^2 + T6*x*y^3 + T7*x^3*z + T8*x^2*z^2 + T9*x*z^3 + "
                   "T10*y^3*z + T11*y^2*z^2 + T12*y*z^3 + T13*x^2*y*z + T14*x*y^2*z + T15*x*y*z^2";
        default:
            return "P1*x^5 + P2*y^5 + P3*z^5 + P4*x^4*y + P5*x^3*y^2 + P6*x^2*y^3 + P7*x*y^4 + P8*x^4*z + "
                   "P9*x^3*z^2 + P10*x^2*z^3 + P11*x*z^4 + P12*y^4*z + P13*y^3*z^2 + P14*y^2*z^3 + P15*y*z^4 + "
                   "P16*x^3*y*z + P17*x*y^3*z + P18*x*y*z^3 + P19*x^2*y^2*z + P20*x^2*y*z^2 + P21*x*y^2*z^2";
    }
}

/// Random element of a polynomial ring: up to `max_terms` terms, exponents up
/// to `max_exp`, coefficients from the base sampler.
template <CommutativeRing Base>
typename PolynomialRing<Base>::value_type random_poly(const PolynomialRing<Base>& ring, Rng& rng, int max_terms = 5,
                                                      int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> ex(0, static_cast<std::uint32_t>(max_exp));
    std::vector<std::pair<Monomial, typename Base::value_type>> terms;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<std::uint32_t> e(ring.arity());
        for (auto& v : e) v = ex(rng);
        if constexpr (is_polynomial_ring_v<Base>)
            terms.emplace_back(Monomial(std::move(e)), random_poly(ring.base(), rng, 3, 2));
        else
            terms.emplace_back(Monomial(std::move(e)), random_element(ring.base(), rng));
    }
    return ring.from_terms(terms);
}

}  // namespace pfrep::test

#endif
