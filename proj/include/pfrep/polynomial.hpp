#ifndef PFREP_POLYNOMIAL_HPP
#define PFREP_POLYNOMIAL_HPP

// Sparse multivariate polynomials over any CommutativeRing. The polynomial
// ring is itself a CommutativeRing, so rings nest: Z[T1..T15][x,y,z] is
// PolynomialRing<PolynomialRing<IntegerRing>>.

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pfrep/error.hpp"
#include "pfrep/ring.hpp"
#include "pfrep/text.hpp"

namespace pfrep {

/// Exponent vector, one slot per ring variable in declared order.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}
    Monomial(std::initializer_list<std::uint32_t> e) : exponents(e) {}

    std::size_t arity() const { return exponents.size(); }
    unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lexicographic order, largest first. With variables (x, y, z) this
/// lists x^2 > xy > xz > y^2 > yz > z^2.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents > b.exponents;
    }
};

template <CommutativeRing Base>
class PolynomialRing;

template <class Coef>
class MultiPoly {
public:
    using coefficient_type = Coef;
    using term_map = std::map<Monomial, Coef, GrlexDescending>;

    const std::vector<std::string>& variables() const { return *vars_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Maximum total degree; empty for the zero polynomial.
    std::optional<unsigned> degree() const {
        if (terms_.empty()) return std::nullopt;
        // grlex puts the highest degree first
        return terms_.begin()->first.degree();
    }

    /// True iff every term has total degree d. Zero is homogeneous of every degree.
    bool is_homogeneous(unsigned d) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) && a.terms_ == b.terms_;
    }

private:
    template <CommutativeRing>
    friend class PolynomialRing;

    MultiPoly(std::shared_ptr<const std::vector<std::string>> vars, term_map terms)
        : vars_(std::move(vars)), terms_(std::move(terms)) {}

    std::shared_ptr<const std::vector<std::string>> vars_;
    term_map terms_;
};

template <class Coef>
std::optional<unsigned> degree(const MultiPoly<Coef>& p) {
    return p.degree();
}

template <class Coef>
bool is_homogeneous(const MultiPoly<Coef>& p, unsigned d) {
    return p.is_homogeneous(d);
}

namespace detail {

inline bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace detail

/// Base[v1, ..., vn]. Variable names must be distinct identifiers and must not
/// collide with any variable of the base ring.
template <CommutativeRing Base>
class PolynomialRing {
public:
    using base_ring = Base;
    using coefficient_type = typename Base::value_type;
    using value_type = MultiPoly<coefficient_type>;

    PolynomialRing(Base base, std::vector<std::string> names)
        : base_(std::move(base)),
          vars_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
        std::unordered_set<std::string> seen;
        for (const auto& v : base_.variables()) seen.insert(v);
        for (const auto& v : *vars_) {
            if (!detail::is_identifier(v)) throw InvalidRing("invalid variable name '" + v + "'");
            if (!seen.insert(v).second) throw InvalidRing("duplicate variable name '" + v + "'");
        }
    }

    const Base& base() const { return base_; }
    const std::vector<std::string>& names() const { return *vars_; }
    std::size_t arity() const { return vars_->size(); }

    value_type zero() const { return value_type(vars_, {}); }
    value_type one() const { return constant(base_.one()); }
    value_type from_int(long long k) const { return constant(base_.from_int(k)); }
    value_type from_integer(const Integer& k) const { return constant(base_.from_integer(k)); }

    value_type constant(const coefficient_type& c) const { return term(Monomial(std::vector<std::uint32_t>(arity(), 0)), c); }

    /// The i-th variable (0-based).
    value_type variable(std::size_t i) const {
        if (i >= arity()) throw IndexError("variable index out of range");
        std::vector<std::uint32_t> e(arity(), 0);
        e[i] = 1;
        return term(Monomial(std::move(e)), base_.one());
    }

    value_type variable(const std::string& name) const {
        for (std::size_t i = 0; i < arity(); ++i)
            if ((*vars_)[i] == name) return variable(i);
        throw IndexError("no variable named '" + name + "'");
    }

    value_type term(Monomial m, const coefficient_type& c) const {
        check_arity(m);
        typename value_type::term_map t;
        auto cc = base_.canonical(c);
        if (!base_.is_zero(cc)) t.emplace(std::move(m), std::move(cc));
        return value_type(vars_, std::move(t));
    }

    /// Combines duplicate monomials and drops zero coefficients.
    value_type from_terms(std::span<const std::pair<Monomial, coefficient_type>> terms) const {
        typename value_type::term_map t;
        for (const auto& [m, c] : terms) {
            check_arity(m);
            accumulate(t, m, base_.canonical(c));
        }
        strip(t);
        return value_type(vars_, std::move(t));
    }

    value_type from_terms(std::initializer_list<std::pair<Monomial, coefficient_type>> terms) const {
        return from_terms(std::span<const std::pair<Monomial, coefficient_type>>(terms.begin(), terms.size()));
    }

    coefficient_type coefficient(const value_type& p, const Monomial& m) const {
        check(p);
        auto it = p.terms_.find(m);
        return it == p.terms_.end() ? base_.zero() : it->second;
    }

    value_type add(const value_type& p, const value_type& q) const {
        check(p);
        check(q);
        auto t = p.terms_;
        for (const auto& [m, c] : q.terms_) accumulate(t, m, c);
        strip(t);
        return value_type(vars_, std::move(t));
    }

    value_type neg(const value_type& p) const {
        check(p);
        typename value_type::term_map t;
        for (const auto& [m, c] : p.terms_) t.emplace_hint(t.end(), m, base_.neg(c));
        return value_type(vars_, std::move(t));
    }

    value_type sub(const value_type& p, const value_type& q) const { return add(p, neg(q)); }

    value_type mul(const value_type& p, const value_type& q) const {
        check(p);
        check(q);
        typename value_type::term_map t;
        const std::size_t n = arity();
        for (const auto& [mp, cp] : p.terms_) {
            for (const auto& [mq, cq] : q.terms_) {
                std::vector<std::uint32_t> e(n);
                for (std::size_t i = 0; i < n; ++i) e[i] = mp.exponents[i] + mq.exponents[i];
                accumulate(t, Monomial(std::move(e)), base_.mul(cp, cq));
            }
        }
        strip(t);
        return value_type(vars_, std::move(t));
    }

    /// Multiplies every coefficient by a base-ring scalar.
    value_type scale(const coefficient_type& s, const value_type& p) const {
        check(p);
        typename value_type::term_map t;
        for (const auto& [m, c] : p.terms_) {
            auto v = base_.mul(s, c);
            if (!base_.is_zero(v)) t.emplace_hint(t.end(), m, std::move(v));
        }
        return value_type(vars_, std::move(t));
    }

    bool eq(const value_type& p, const value_type& q) const {
        check(p);
        check(q);
        return p.terms_ == q.terms_;
    }

    bool is_zero(const value_type& p) const { return p.terms_.empty(); }

    value_type canonical(const value_type& p) const {
        check(p);
        typename value_type::term_map t;
        for (const auto& [m, c] : p.terms_) {
            auto cc = base_.canonical(c);
            if (!base_.is_zero(cc)) t.emplace_hint(t.end(), m, std::move(cc));
        }
        return value_type(vars_, std::move(t));
    }

    /// Substitutes `point` (one base element per variable) and folds in Base.
    coefficient_type evaluate(const value_type& p, std::span<const coefficient_type> point) const {
        check(p);
        if (point.size() != arity()) throw ShapeError("evaluation point has wrong length");
        auto result = base_.zero();
        for (const auto& [m, c] : p.terms_) {
            auto v = c;
            for (std::size_t i = 0; i < arity(); ++i)
                if (m.exponents[i] != 0) v = base_.mul(v, pow(base_, point[i], m.exponents[i]));
            result = base_.add(result, v);
        }
        return result;
    }

    std::string describe() const {
        std::string s = base_.describe() + "[";
        for (std::size_t i = 0; i < arity(); ++i) s += (i ? "," : "") + (*vars_)[i];
        return s + "]";
    }

    /// All variable names visible in this ring, outermost first.
    std::vector<std::string> variables() const {
        std::vector<std::string> all = *vars_;
        for (auto& v : base_.variables()) all.push_back(std::move(v));
        return all;
    }

    value_type from_term(const Rational& c, std::span<const VarPower> factors, std::size_t offset) const {
        std::vector<std::uint32_t> e(arity(), 0);
        std::vector<VarPower> rest;
        for (const auto& f : factors) {
            std::size_t i = 0;
            while (i < arity() && (*vars_)[i] != f.name) ++i;
            if (i == arity()) {
                rest.push_back(f);
                continue;
            }
            if (e[i] + f.exponent > detail::max_exponent) throw ParseError("exponent too large", f.offset);
            e[i] += f.exponent;
        }
        return term(Monomial(std::move(e)), base_.from_term(c, rest, offset));
    }

    std::vector<PrintTerm> print_terms(const value_type& p, Style style) const {
        check(p);
        std::vector<PrintTerm> out;
        for (const auto& [m, c] : p.terms_) {
            std::string mono;
            for (std::size_t i = 0; i < arity(); ++i)
                if (m.exponents[i] != 0)
                    mono = join_factors(mono, variable_text((*vars_)[i], m.exponents[i], style), style);
            for (auto& bt : base_.print_terms(c, style)) {
                bt.factors = join_factors(bt.factors, mono, style);
                out.push_back(std::move(bt));
            }
        }
        return out;
    }

    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
        return a.base_ == b.base_ && *a.vars_ == *b.vars_;
    }

private:
    Base base_;
    std::shared_ptr<const std::vector<std::string>> vars_;

    void check(const value_type& p) const {
        if (p.vars_ != vars_ && (!p.vars_ || *p.vars_ != *vars_))
            throw RingMismatch("polynomial belongs to a different ring");
    }

    void check_arity(const Monomial& m) const {
        if (m.arity() != arity()) throw ShapeError("monomial has wrong number of exponents");
    }

    void accumulate(typename value_type::term_map& t, const Monomial& m, const coefficient_type& c) const {
        auto [it, inserted] = t.try_emplace(m, c);
        if (!inserted) it->second = base_.add(it->second, c);
    }

    void strip(typename value_type::term_map& t) const {
        std::erase_if(t, [&](const auto& kv) { return base_.is_zero(kv.second); });
    }
};

template <CommutativeRing Base>
typename PolynomialRing<Base>::value_type poly_from_terms(
    const PolynomialRing<Base>& ring,
    std::span<const std::pair<Monomial, typename Base::value_type>> terms) {
    return ring.from_terms(terms);
}

template <class R>
inline constexpr bool is_polynomial_ring_v = false;

template <CommutativeRing Base>
inline constexpr bool is_polynomial_ring_v<PolynomialRing<Base>> = true;

}  // namespace pfrep

#endif
