#ifndef PFREP_RING_HPP
#define PFREP_RING_HPP

// Commutative rings with 1. A ring is a small copyable object that carries the
// arithmetic for its value_type; values themselves are plain canonical data.
// There is no division anywhere in the contract.

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfrep/error.hpp"
#include "pfrep/text.hpp"

namespace pfrep {

template <class R>
concept CommutativeRing = std::copy_constructible<R> &&
    requires(const R& r, const typename R::value_type& a, long long k, const Integer& n,
             std::span<const VarPower> f, Style s) {
        typename R::value_type;
        { r.zero() } -> std::same_as<typename R::value_type>;
        { r.one() } -> std::same_as<typename R::value_type>;
        { r.from_int(k) } -> std::same_as<typename R::value_type>;
        { r.from_integer(n) } -> std::same_as<typename R::value_type>;
        { r.add(a, a) } -> std::same_as<typename R::value_type>;
        { r.sub(a, a) } -> std::same_as<typename R::value_type>;
        { r.neg(a) } -> std::same_as<typename R::value_type>;
        { r.mul(a, a) } -> std::same_as<typename R::value_type>;
        { r.eq(a, a) } -> std::same_as<bool>;
        { r.is_zero(a) } -> std::same_as<bool>;
        { r.canonical(a) } -> std::same_as<typename R::value_type>;
        { r.describe() } -> std::same_as<std::string>;
        { r.variables() } -> std::same_as<std::vector<std::string>>;
        { r.from_term(Rational{}, f, std::size_t{}) } -> std::same_as<typename R::value_type>;
        { r.print_terms(a, s) } -> std::same_as<std::vector<PrintTerm>>;
        { r == r } -> std::same_as<bool>;
    };

/// The integers, arbitrary precision.
class IntegerRing {
public:
    using value_type = Integer;

    Integer zero() const { return 0; }
    Integer one() const { return 1; }
    Integer from_int(long long k) const { return k; }
    Integer from_integer(const Integer& n) const { return n; }

    Integer add(const Integer& a, const Integer& b) const { return a + b; }
    Integer sub(const Integer& a, const Integer& b) const { return a - b; }
    Integer neg(const Integer& a) const { return -a; }
    Integer mul(const Integer& a, const Integer& b) const { return a * b; }
    bool eq(const Integer& a, const Integer& b) const { return a == b; }
    bool is_zero(const Integer& a) const { return a.is_zero(); }
    Integer canonical(const Integer& a) const { return a; }

    std::string describe() const { return "int"; }
    std::vector<std::string> variables() const { return {}; }

    Integer from_term(const Rational& c, std::span<const VarPower> factors, std::size_t offset) const {
        if (!factors.empty())
            throw ParseError("unknown variable '" + factors.front().name + "'", factors.front().offset);
        if (boost::multiprecision::denominator(c) != 1) throw ParseError("non-integral coefficient", offset);
        return boost::multiprecision::numerator(c);
    }

    std::vector<PrintTerm> print_terms(const Integer& a, Style) const {
        if (a.is_zero()) return {};
        return {PrintTerm{a < 0, Integer(boost::multiprecision::abs(a)).str(), {}}};
    }

    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

/// The rationals; values are always fully reduced with positive denominator.
class RationalRing {
public:
    using value_type = Rational;

    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_int(long long k) const { return k; }
    Rational from_integer(const Integer& n) const { return Rational(n); }

    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational neg(const Rational& a) const { return -a; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    bool eq(const Rational& a, const Rational& b) const { return a == b; }
    bool is_zero(const Rational& a) const { return a.is_zero(); }
    Rational canonical(const Rational& a) const {
        return Rational(boost::multiprecision::numerator(a), boost::multiprecision::denominator(a));
    }

    std::string describe() const { return "rat"; }
    std::vector<std::string> variables() const { return {}; }

    Rational from_term(const Rational& c, std::span<const VarPower> factors, std::size_t) const {
        if (!factors.empty())
            throw ParseError("unknown variable '" + factors.front().name + "'", factors.front().offset);
        return c;
    }

    std::vector<PrintTerm> print_terms(const Rational& a, Style style) const {
        if (a.is_zero()) return {};
        return {PrintTerm{a < 0, rational_text(Rational(boost::multiprecision::abs(a)), style), {}}};
    }

    friend bool operator==(const RationalRing&, const RationalRing&) { return true; }
};

/// Residue class in Z/n. Only meaningful together with its ModularRing.
struct Residue {
    std::uint64_t value = 0;
    friend bool operator==(const Residue&, const Residue&) = default;
};

/// Z/n for 2 <= n < 2^63; n may be composite.
class ModularRing {
public:
    using value_type = Residue;

    explicit ModularRing(std::uint64_t modulus) : n_(modulus) {
        if (modulus < 2) throw InvalidRing("modulus must be at least 2");
        if (modulus >= (std::uint64_t{1} << 63)) throw InvalidRing("modulus too large");
    }

    std::uint64_t modulus() const { return n_; }

    Residue zero() const { return {0}; }
    Residue one() const { return {1}; }
    Residue from_int(long long k) const { return from_integer(Integer(k)); }
    Residue from_integer(const Integer& k) const {
        Integer r = k % n_;
        if (r < 0) r += n_;
        return {static_cast<std::uint64_t>(r)};
    }

    Residue add(const Residue& a, const Residue& b) const {
        std::uint64_t s = a.value + b.value;
        return {s >= n_ ? s - n_ : s};
    }
    Residue sub(const Residue& a, const Residue& b) const { return add(a, neg(b)); }
    Residue neg(const Residue& a) const { return {a.value == 0 ? 0 : n_ - a.value}; }
    Residue mul(const Residue& a, const Residue& b) const {
        return {static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.value) * b.value % n_)};
    }
    bool eq(const Residue& a, const Residue& b) const { return a == b; }
    bool is_zero(const Residue& a) const { return a.value == 0; }
    Residue canonical(const Residue& a) const { return {a.value % n_}; }

    std::string describe() const { return "mod:" + std::to_string(n_); }
    std::vector<std::string> variables() const { return {}; }

    Residue from_term(const Rational& c, std::span<const VarPower> factors, std::size_t offset) const {
        if (!factors.empty())
            throw ParseError("unknown variable '" + factors.front().name + "'", factors.front().offset);
        if (boost::multiprecision::denominator(c) != 1) throw ParseError("non-integral coefficient", offset);
        return from_integer(boost::multiprecision::numerator(c));
    }

    std::vector<PrintTerm> print_terms(const Residue& a, Style) const {
        if (a.value == 0) return {};
        return {PrintTerm{false, std::to_string(a.value), {}}};
    }

    friend bool operator==(const ModularRing& a, const ModularRing& b) { return a.n_ == b.n_; }

private:
    std::uint64_t n_;
};

template <CommutativeRing R>
typename R::value_type pow(const R& ring, const typename R::value_type& base, unsigned exponent) {
    auto result = ring.one();
    auto b = base;
    while (exponent != 0) {
        if (exponent & 1u) result = ring.mul(result, b);
        exponent >>= 1;
        if (exponent != 0) b = ring.mul(b, b);
    }
    return result;
}

/// Parses element text in `ring`'s syntax (see text.hpp for the grammar).
template <CommutativeRing R>
typename R::value_type parse(const R& ring, std::string_view text) {
    auto value = ring.zero();
    for (const auto& t : parse_terms(text))
        value = ring.add(value, ring.from_term(t.coefficient, t.factors, t.offset));
    return value;
}

template <CommutativeRing R>
std::string format(const R& ring, const typename R::value_type& value, Style style = Style::plain) {
    return join_terms(ring.print_terms(value, style), style);
}

}  // namespace pfrep

#endif
