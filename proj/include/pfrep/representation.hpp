#ifndef PFREP_REPRESENTATION_HPP
#define PFREP_REPRESENTATION_HPP

// Explicit linear Pfaffian representations M = x*A + y*B + z*C of ternary
// forms of degree 1..5 over any commutative ring, their verification, and the
// "nice" predicate (entries only 0, +-1 and signed coefficient symbols, each
// symbol in exactly one position).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pfrep/error.hpp"
#include "pfrep/pfaffian.hpp"
#include "pfrep/polynomial.hpp"
#include "pfrep/ring.hpp"

namespace pfrep {

inline constexpr int min_degree = 1;
inline constexpr int max_degree = 5;

/// Exponent triple (x, y, z).
using Exponent3 = std::array<std::uint32_t, 3>;

namespace detail {

inline constexpr std::array<Exponent3, 3> slots_d1{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

inline constexpr std::array<Exponent3, 6> slots_d2{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};

inline constexpr std::array<Exponent3, 10> slots_d3{{{3, 0, 0},
                                                     {0, 3, 0},
                                                     {0, 0, 3},
                                                     {2, 1, 0},
                                                     {1, 2, 0},
                                                     {2, 0, 1},
                                                     {1, 0, 2},
                                                     {0, 2, 1},
                                                     {0, 1, 2},
                                                     {1, 1, 1}}};

inline constexpr std::array<Exponent3, 15> slots_d4{{{4, 0, 0},
                                                     {0, 4, 0},
                                                     {0, 0, 4},
                                                     {3, 1, 0},
                                                     {2, 2, 0},
                                                     {1, 3, 0},
                                                     {3, 0, 1},
                                                     {2, 0, 2},
                                                     {1, 0, 3},
                                                     {0, 3, 1},
                                                     {0, 2, 2},
                                                     {0, 1, 3},
                                                     {2, 1, 1},
                                                     {1, 2, 1},
                                                     {1, 1, 2}}};

inline constexpr std::array<Exponent3, 21> slots_d5{{{5, 0, 0}, {0, 5, 0}, {0, 0, 5}, {4, 1, 0}, {3, 2, 0}, {2, 3, 0},
                                                     {1, 4, 0}, {4, 0, 1}, {3, 0, 2}, {2, 0, 3}, {1, 0, 4}, {0, 4, 1},
                                                     {0, 3, 2}, {0, 2, 3}, {0, 1, 4}, {3, 1, 1}, {1, 3, 1}, {1, 1, 3},
                                                     {2, 2, 1}, {2, 1, 2}, {1, 2, 2}}};

/// One placed entry of a builder layout. `slot` is 1-based; 0 marks a
/// constant entry whose value is `sign`.
struct Placement {
    char matrix;  // 'A', 'B' or 'C'
    std::size_t i, j;
    int sign;
    int slot;
};

inline constexpr std::array<Placement, 3> layout_d1{{{'A', 1, 2, 1, 1}, {'B', 1, 2, 1, 2}, {'C', 1, 2, 1, 3}}};

inline constexpr std::array<Placement, 9> layout_d2{{
    {'A', 1, 2, 1, 0}, {'A', 1, 3, 1, 4}, {'A', 1, 4, 1, 5}, {'A', 3, 4, 1, 1},
    {'B', 1, 3, 1, 2}, {'B', 1, 4, 1, 6}, {'B', 2, 4, -1, 0},
    {'C', 1, 4, 1, 3}, {'C', 2, 3, 1, 0},
}};

inline constexpr std::array<Placement, 17> layout_d3{{
    {'A', 1, 2, 1, 1}, {'A', 1, 3, 1, 10}, {'A', 1, 5, 1, 6}, {'A', 1, 6, 1, 5}, {'A', 3, 4, -1, 0}, {'A', 5, 6, -1, 0},
    {'B', 1, 2, 1, 4}, {'B', 1, 5, -1, 0}, {'B', 1, 6, 1, 2}, {'B', 2, 3, -1, 0}, {'B', 4, 5, -1, 0},
    {'C', 1, 3, 1, 9}, {'C', 1, 4, 1, 0}, {'C', 1, 5, 1, 7}, {'C', 1, 6, 1, 8}, {'C', 2, 6, 1, 0}, {'C', 3, 5, 1, 3},
}};

// Index 7 carries signs (a78 = 1, b57 = -1, c27 = 1). The mirrored choice of
// those three signs is congruent via diag(.., -1, ..) and yields -f instead.
inline constexpr std::array<Placement, 24> layout_d4{{
    {'A', 1, 2, 1, 1}, {'A', 1, 3, 1, 6}, {'A', 1, 5, 1, 4}, {'A', 3, 4, 1, 0}, {'A', 3, 5, 1, 15},
    {'A', 3, 8, 1, 9}, {'A', 5, 6, 1, 0}, {'A', 5, 8, 1, 8}, {'A', 7, 8, 1, 0},
    {'B', 1, 3, 1, 2}, {'B', 1, 5, 1, 5}, {'B', 2, 6, -1, 0}, {'B', 2, 8, 1, 14}, {'B', 3, 5, 1, 11},
    {'B', 4, 8, -1, 0}, {'B', 5, 7, -1, 0},
    {'C', 1, 2, 1, 7}, {'C', 1, 3, 1, 10}, {'C', 1, 5, 1, 13}, {'C', 1, 6, -1, 0}, {'C', 2, 7, 1, 0},
    {'C', 3, 5, 1, 12}, {'C', 3, 8, 1, 3}, {'C', 4, 5, 1, 0},
}};

// Degree 5 without the nine derived positions, which are filled separately.
inline constexpr std::array<Placement, 24> layout_d5{{
    {'A', 1, 2, 1, 1}, {'A', 2, 5, 1, 7}, {'A', 2, 7, 1, 5}, {'A', 2, 8, -1, 9}, {'A', 3, 4, 1, 0},
    {'A', 5, 6, 1, 0}, {'A', 7, 8, 1, 0}, {'A', 9, 10, 1, 0},
    {'B', 1, 2, 1, 4}, {'B', 1, 3, 1, 0}, {'B', 2, 5, 1, 2}, {'B', 2, 7, 1, 6}, {'B', 3, 8, 1, 15},
    {'B', 4, 8, 1, 0}, {'B', 6, 10, 1, 0}, {'B', 7, 9, 1, 0},
    {'C', 1, 2, 1, 8}, {'C', 1, 5, 1, 0}, {'C', 2, 10, 1, 0}, {'C', 3, 8, 1, 3}, {'C', 4, 9, 1, 0},
    {'C', 6, 7, 1, 0}, {'C', 6, 9, -1, 10}, {'C', 8, 9, -1, 11},
}};

struct DerivedPosition {
    const char* name;
    char matrix;
    std::size_t i, j;
};

inline constexpr std::array<DerivedPosition, 9> derived_positions{{
    {"a23", 'A', 2, 3}, {"a29", 'A', 2, 9}, {"a39", 'A', 3, 9},
    {"b23", 'B', 2, 3}, {"b29", 'B', 2, 9}, {"b39", 'B', 3, 9},
    {"b68", 'B', 6, 8}, {"b69", 'B', 6, 9}, {"c23", 'C', 2, 3},
}};

}  // namespace detail

/// Number of coefficient slots for degree d (the count of degree-d monomials
/// in three variables).
inline std::size_t slot_count(int d) {
    if (d < min_degree || d > max_degree) throw UnsupportedDegree("degree " + std::to_string(d) + " is outside 1..5");
    return static_cast<std::size_t>((d + 1) * (d + 2) / 2);
}

/// Monomials for the coefficient slots of degree d, in slot order.
inline std::vector<Exponent3> slot_monomials(int d) {
    slot_count(d);
    auto to_vec = [](const auto& arr) { return std::vector<Exponent3>(arr.begin(), arr.end()); };
    switch (d) {
        case 1: return to_vec(detail::slots_d1);
        case 2: return to_vec(detail::slots_d2);
        case 3: return to_vec(detail::slots_d3);
        case 4: return to_vec(detail::slots_d4);
        default: return to_vec(detail::slots_d5);
    }
}

/// Generic coefficient names: T1..Tn for d <= 4, P1..P21 for d = 5.
inline std::vector<std::string> generic_symbols(int d) {
    const std::size_t n = slot_count(d);
    const char head = d == 5 ? 'P' : 'T';
    std::vector<std::string> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back(head + std::to_string(k));
    return out;
}

template <CommutativeRing R>
struct CoefficientVector {
    int degree;
    std::vector<typename R::value_type> slots;
};

template <CommutativeRing R>
struct Representation {
    int degree;
    SkewMatrix<R> a, b, c;
    std::map<std::string, typename R::value_type> derived;

    std::size_t size() const { return a.size(); }
    const R& ring() const { return a.ring(); }

    const SkewMatrix<R>& matrix(char name) const {
        return name == 'A' ? a : name == 'B' ? b : c;
    }
    SkewMatrix<R>& matrix(char name) { return name == 'A' ? a : name == 'B' ? b : c; }
};

/// Z[x, y, z] style ring of ternary forms over R.
template <CommutativeRing R>
PolynomialRing<R> form_ring(const R& coefficients) {
    return PolynomialRing<R>(coefficients, {"x", "y", "z"});
}

/// Z[T1..Tn] (or Z[P1..P21]) for degree d.
inline PolynomialRing<IntegerRing> generic_ring(int d) {
    return PolynomialRing<IntegerRing>(IntegerRing{}, generic_symbols(d));
}

/// The coefficient vector whose slots are the generic indeterminates.
inline CoefficientVector<PolynomialRing<IntegerRing>> generic_coefficients(const PolynomialRing<IntegerRing>& ring,
                                                                           int d) {
    const std::size_t n = slot_count(d);
    if (ring.arity() < n) throw InvalidRing("generic ring has too few indeterminates");
    CoefficientVector<PolynomialRing<IntegerRing>> cv{d, {}};
    for (std::size_t k = 0; k < n; ++k) cv.slots.push_back(ring.variable(k));
    return cv;
}

template <CommutativeRing R>
typename PolynomialRing<R>::value_type poly_from_coeffs(const PolynomialRing<R>& forms,
                                                        const CoefficientVector<R>& cv) {
    const auto monos = slot_monomials(cv.degree);
    if (cv.slots.size() != monos.size()) throw ShapeError("coefficient vector has wrong length");
    std::vector<std::pair<Monomial, typename R::value_type>> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
        terms.emplace_back(Monomial{monos[k][0], monos[k][1], monos[k][2]}, cv.slots[k]);
    return forms.from_terms(terms);
}

template <CommutativeRing R>
CoefficientVector<R> coeffs_from_poly(const PolynomialRing<R>& forms, const typename PolynomialRing<R>::value_type& f,
                                      int d) {
    const auto monos = slot_monomials(d);
    if (forms.arity() != 3) throw ShapeError("forms must live in a ring with three variables");
    CoefficientVector<R> cv{d, std::vector<typename R::value_type>(monos.size(), forms.base().zero())};
    for (const auto& [m, coef] : f.terms()) {
        if (m.degree() != static_cast<unsigned>(d))
            throw DegreeError("term of degree " + std::to_string(m.degree()) + " in a form of degree " + std::to_string(d));
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (m.exponents[0] == monos[k][0] && m.exponents[1] == monos[k][1] && m.exponents[2] == monos[k][2])
                cv.slots[k] = coef;
    }
    return cv;
}

namespace detail {

template <CommutativeRing R>
void require_degree(const CoefficientVector<R>& cv, int d) {
    if (cv.degree != d)
        throw DegreeError("expected degree " + std::to_string(d) + " coefficients, got " + std::to_string(cv.degree));
    if (cv.slots.size() != slot_count(d)) throw ShapeError("coefficient vector has wrong length");
}

template <CommutativeRing R, std::size_t N>
Representation<R> place(const R& ring, const CoefficientVector<R>& cv, const std::array<Placement, N>& layout) {
    const std::size_t size = 2 * static_cast<std::size_t>(cv.degree);
    Representation<R> rep{cv.degree, SkewMatrix<R>(ring, size), SkewMatrix<R>(ring, size), SkewMatrix<R>(ring, size), {}};
    for (const auto& p : layout) {
        auto v = p.slot == 0 ? ring.one() : cv.slots[static_cast<std::size_t>(p.slot - 1)];
        rep.matrix(p.matrix).set(p.i, p.j, p.sign < 0 ? ring.neg(v) : v);
    }
    return rep;
}

}  // namespace detail

/// 2x2 pencil with m12 = c1 x + c2 y + c3 z.
template <CommutativeRing R>
Representation<R> build_m1(const R& ring, const CoefficientVector<R>& cv) {
    detail::require_degree(cv, 1);
    return detail::place(ring, cv, detail::layout_d1);
}

template <CommutativeRing R>
Representation<R> build_m2(const R& ring, const CoefficientVector<R>& cv) {
    detail::require_degree(cv, 2);
    return detail::place(ring, cv, detail::layout_d2);
}

template <CommutativeRing R>
Representation<R> build_m3(const R& ring, const CoefficientVector<R>& cv) {
    detail::require_degree(cv, 3);
    return detail::place(ring, cv, detail::layout_d3);
}

template <CommutativeRing R>
Representation<R> build_m4(const R& ring, const CoefficientVector<R>& cv) {
    detail::require_degree(cv, 4);
    return detail::place(ring, cv, detail::layout_d4);
}

/// The nine entries of the degree-5 pencil that are polynomial expressions
/// in the coefficients rather than single coefficients.
template <CommutativeRing R>
std::map<std::string, typename R::value_type> derived_entries(const R& ring, const CoefficientVector<R>& cv) {
    detail::require_degree(cv, 5);
    auto p = [&](int k) { return cv.slots[static_cast<std::size_t>(k - 1)]; };
    auto mul = [&](auto... xs) {
        auto r = ring.one();
        ((r = ring.mul(r, xs)), ...);
        return r;
    };
    auto sum = [&](auto... xs) {
        auto r = ring.zero();
        ((r = ring.add(r, xs)), ...);
        return r;
    };
    auto neg = [&](const auto& v) { return ring.neg(v); };
    const auto one = ring.one();
    const auto two = ring.add(one, one);

    std::map<std::string, typename R::value_type> d;
    d.emplace("a23", sum(neg(mul(two, p(6), p(5), p(3))), neg(mul(p(6), p(18))), neg(mul(p(5), p(14))), one, neg(p(17))));
    d.emplace("a29", sum(neg(mul(p(6), p(5), p(11))), neg(mul(p(15), p(5), p(5))), neg(mul(p(5), p(21))), p(16)));
    d.emplace("a39", sum(neg(mul(p(5), p(3))), neg(p(18))));
    d.emplace("b23", sum(neg(mul(p(6), p(6), p(3))), neg(p(12)), neg(mul(p(6), p(14)))));
    d.emplace("b29", sum(mul(p(5), p(5), p(3)), mul(p(5), p(18)), neg(mul(p(6), p(6), p(11))),
                         neg(mul(p(6), p(15), p(5))), neg(mul(p(6), p(21))), neg(p(9)), p(19)));
    d.emplace("b39", sum(neg(mul(p(6), p(3))), neg(p(14))));
    d.emplace("b68", sum(mul(p(6), p(11)), mul(p(15), p(5)), p(21)));
    d.emplace("b69", sum(neg(mul(p(5), p(11))), neg(one), neg(p(20))));
    d.emplace("c23", sum(neg(mul(p(6), p(15))), neg(p(13))));
    return d;
}

template <CommutativeRing R>
Representation<R> build_m5(const R& ring, const CoefficientVector<R>& cv) {
    detail::require_degree(cv, 5);
    auto rep = detail::place(ring, cv, detail::layout_d5);
    rep.derived = derived_entries(ring, cv);
    for (const auto& pos : detail::derived_positions) rep.matrix(pos.matrix).set(pos.i, pos.j, rep.derived.at(pos.name));
    return rep;
}

template <CommutativeRing R>
Representation<R> build(const R& ring, const CoefficientVector<R>& cv) {
    switch (cv.degree) {
        case 1: return build_m1(ring, cv);
        case 2: return build_m2(ring, cv);
        case 3: return build_m3(ring, cv);
        case 4: return build_m4(ring, cv);
        case 5: return build_m5(ring, cv);
        default: throw UnsupportedDegree("degree " + std::to_string(cv.degree) + " is outside 1..5");
    }
}

/// Chooses the degree of f (or uses `degree` when given) and builds its
/// representation. A zero form needs an explicit degree.
template <CommutativeRing R>
Representation<R> represent(const PolynomialRing<R>& forms, const typename PolynomialRing<R>::value_type& f,
                            std::optional<int> degree = std::nullopt) {
    const auto fd = f.degree();
    int d = 0;
    if (!fd) {
        if (!degree) throw AmbiguousDegree("the zero form needs an explicit degree");
        d = *degree;
    } else {
        if (!f.is_homogeneous(*fd)) throw DegreeError("form is not homogeneous");
        d = static_cast<int>(*fd);
        if (degree && *degree != d)
            throw DegreeError("form has degree " + std::to_string(d) + ", requested " + std::to_string(*degree));
    }
    if (d < min_degree || d > max_degree) throw UnsupportedDegree("degree " + std::to_string(d) + " is outside 1..5");
    return build(forms.base(), coeffs_from_poly(forms, f, d));
}

/// M = x*A + y*B + z*C over the form ring.
template <CommutativeRing R>
SkewMatrix<PolynomialRing<R>> pencil(const PolynomialRing<R>& forms, const Representation<R>& rep) {
    if (!(forms.base() == rep.ring())) throw RingMismatch("representation and forms use different rings");
    const std::size_t n = rep.size();
    SkewMatrix<PolynomialRing<R>> m(forms, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            std::vector<std::pair<Monomial, typename R::value_type>> terms{
                {Monomial{1, 0, 0}, rep.a.upper(i, j)},
                {Monomial{0, 1, 0}, rep.b.upper(i, j)},
                {Monomial{0, 0, 1}, rep.c.upper(i, j)},
            };
            m.set(i, j, forms.from_terms(terms));
        }
    return m;
}

template <CommutativeRing R>
struct VerifyReport {
    bool pfaffian_matches;
    typename PolynomialRing<R>::value_type difference;  // Pf(M) - f
    std::optional<bool> determinant_matches;            // det(M) == f^2, when requested

    bool ok() const { return pfaffian_matches && determinant_matches.value_or(true); }
};

template <CommutativeRing R>
VerifyReport<R> verify_report(const PolynomialRing<R>& forms, const Representation<R>& rep,
                              const typename PolynomialRing<R>::value_type& f, bool cross_check = false) {
    const auto m = pencil(forms, rep);
    auto diff = forms.sub(pfaffian(m), f);
    VerifyReport<R> report{forms.is_zero(diff), std::move(diff), std::nullopt};
    if (cross_check) report.determinant_matches = forms.eq(determinant(m), forms.mul(f, f));
    return report;
}

/// Exact check that Pf(x*A + y*B + z*C) == f (and det == f^2 if asked).
template <CommutativeRing R>
bool verify(const PolynomialRing<R>& forms, const Representation<R>& rep,
            const typename PolynomialRing<R>::value_type& f, bool cross_check = false) {
    return verify_report(forms, rep, f, cross_check).ok();
}

struct NiceWitness {
    enum class Reason { disallowed_value, repeated_symbol, missing_symbol };
    Reason reason;
    char matrix = 0;  // 0 for missing_symbol
    std::size_t i = 0, j = 0;
    std::string value;  // entry text, or the symbol name
};

struct NiceReport {
    bool nice;
    std::vector<NiceWitness> witnesses;
};

inline std::string to_string(NiceWitness::Reason r) {
    switch (r) {
        case NiceWitness::Reason::disallowed_value: return "disallowed value";
        case NiceWitness::Reason::repeated_symbol: return "coefficient in more than one entry";
        case NiceWitness::Reason::missing_symbol: return "coefficient in no entry";
    }
    return "";
}

/// Decides niceness of a representation over a generic coefficient ring
/// Base[s1, ..., sn]: every entry is 0, +-1 or +-s_k, and each s_k occupies
/// exactly one entry position across A, B, C.
template <CommutativeRing R>
NiceReport is_nice(const Representation<R>& rep) {
    if constexpr (!is_polynomial_ring_v<R>) {
        throw RequiresSymbolicRing("niceness is only decided over a generic coefficient ring");
    } else {
        const R& ring = rep.ring();
        const auto& base = ring.base();
        const std::size_t nsym = ring.arity();
        std::vector<std::vector<std::tuple<char, std::size_t, std::size_t>>> hits(nsym);
        NiceReport report{true, {}};
        for (char name : {'A', 'B', 'C'}) {
            for (const auto& e : rep.matrix(name).nonzero_entries()) {
                bool allowed = false;
                if (e.value.size() == 1) {
                    const auto& [mono, coef] = *e.value.terms().begin();
                    const bool unit = base.eq(coef, base.one()) || base.eq(coef, base.neg(base.one()));
                    if (unit && mono.degree() == 0) {
                        allowed = true;
                    } else if (unit && mono.degree() == 1) {
                        allowed = true;
                        for (std::size_t k = 0; k < nsym; ++k)
                            if (mono.exponents[k] == 1) hits[k].emplace_back(name, e.i, e.j);
                    }
                }
                if (!allowed)
                    report.witnesses.push_back(
                        {NiceWitness::Reason::disallowed_value, name, e.i, e.j, format(ring, e.value)});
            }
        }
        for (std::size_t k = 0; k < nsym; ++k) {
            if (hits[k].empty()) {
                report.witnesses.push_back({NiceWitness::Reason::missing_symbol, 0, 0, 0, ring.names()[k]});
            } else if (hits[k].size() > 1) {
                for (const auto& [name, i, j] : hits[k])
                    report.witnesses.push_back({NiceWitness::Reason::repeated_symbol, name, i, j, ring.names()[k]});
            }
        }
        report.nice = report.witnesses.empty();
        return report;
    }
}

}  // namespace pfrep

#endif
