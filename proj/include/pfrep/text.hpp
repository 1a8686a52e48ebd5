#ifndef PFREP_TEXT_HPP
#define PFREP_TEXT_HPP

// Shared text layer for ring elements: the expression grammar reader and the
// term printer used by every ring's parse()/format().
//
//   polynomial  := sign? term (('+' | '-') term)*
//   term        := coefficient ('*' factor)* | factor ('*' factor)*
//   factor      := variable ('^' positive-integer)?
//   coefficient := integer | integer '/' positive-integer
//
// Whitespace is insignificant.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pfrep/error.hpp"

namespace pfrep {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Style { plain, latex };

struct VarPower {
    std::string name;
    unsigned exponent = 1;
    std::size_t offset = 0;
};

/// One additive term of parsed text, sign already folded into the coefficient.
struct ParsedTerm {
    Rational coefficient;
    std::vector<VarPower> factors;
    std::size_t offset = 0;
};

/// One printable term. `coefficient` is the absolute value as text ("1" for a
/// unit) and `factors` the already-rendered variable part (may be empty).
struct PrintTerm {
    bool negative = false;
    std::string coefficient;
    std::string factors;
};

namespace detail {

inline constexpr unsigned max_exponent = 65535;

class ExpressionReader {
public:
    explicit ExpressionReader(std::string_view text) : text_(text) {}

    std::vector<ParsedTerm> read() {
        std::vector<ParsedTerm> terms;
        skip_ws();
        if (at_end()) fail("empty expression");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            ParsedTerm t = term();
            if (negative) t.coefficient = -t.coefficient;
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("unexpected character");
            negative = peek() == '-';
            ++pos_;
        }
        return terms;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string digits() {
        std::size_t begin = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(begin, pos_ - begin));
    }

    ParsedTerm term() {
        skip_ws();
        ParsedTerm t;
        t.offset = pos_;
        t.coefficient = 1;
        if (at_end()) fail("expected term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer num(digits());
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                std::string d = digits();
                if (d.empty()) fail("expected denominator");
                den = Integer(d);
                if (den == 0) throw ParseError("zero denominator", at);
            }
            t.coefficient = Rational(num, den);
        } else if (is_ident_start(peek())) {
            t.factors.push_back(factor());
        } else {
            fail("expected term");
        }
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
            if (at_end() || !is_ident_start(peek())) fail("expected variable");
            t.factors.push_back(factor());
        }
        return t;
    }

    VarPower factor() {
        VarPower vp;
        vp.offset = pos_;
        std::size_t begin = pos_;
        while (!at_end() && (is_ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek()))))
            ++pos_;
        vp.name = std::string(text_.substr(begin, pos_ - begin));
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            std::string e = digits();
            if (e.empty()) fail("expected exponent");
            if (e.size() > 5 || std::stoul(e) > max_exponent) throw ParseError("exponent too large", at);
            vp.exponent = static_cast<unsigned>(std::stoul(e));
            if (vp.exponent == 0) throw ParseError("exponent must be positive", at);
        }
        return vp;
    }
};

inline bool is_indexed_symbol(std::string_view name, char head) {
    if (name.size() < 2 || name[0] != head) return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

}  // namespace detail

/// Reads `text` with the expression grammar. Throws ParseError.
inline std::vector<ParsedTerm> parse_terms(std::string_view text) {
    return detail::ExpressionReader(text).read();
}

/// Renders a single variable power. In LaTeX, T<k> and P<k> become
/// \Theta_{k} and \Phi_{k}.
inline std::string variable_text(std::string_view name, unsigned exponent, Style style) {
    std::string out;
    if (style == Style::latex && detail::is_indexed_symbol(name, 'T'))
        out = "\\Theta_{" + std::string(name.substr(1)) + "}";
    else if (style == Style::latex && detail::is_indexed_symbol(name, 'P'))
        out = "\\Phi_{" + std::string(name.substr(1)) + "}";
    else
        out = std::string(name);
    if (exponent != 1) {
        if (style == Style::latex)
            out += "^{" + std::to_string(exponent) + "}";
        else
            out += "^" + std::to_string(exponent);
    }
    return out;
}

inline std::string join_factors(const std::string& a, const std::string& b, Style style) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    return a + (style == Style::latex ? " " : "*") + b;
}

inline std::string rational_text(const Rational& magnitude, Style style) {
    const Integer num = boost::multiprecision::numerator(magnitude);
    const Integer den = boost::multiprecision::denominator(magnitude);
    if (den == 1) return num.str();
    if (style == Style::latex) return "\\frac{" + num.str() + "}{" + den.str() + "}";
    return num.str() + "/" + den.str();
}

/// Joins printable terms into "a - b + c" form; the empty list prints as "0".
inline std::string join_terms(const std::vector<PrintTerm>& terms, Style style) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (first)
            out += t.negative ? "-" : "";
        else
            out += t.negative ? " - " : " + ";
        first = false;
        if (t.factors.empty())
            out += t.coefficient;
        else if (t.coefficient == "1")
            out += t.factors;
        else
            out += t.coefficient + (style == Style::latex ? " " : "*") + t.factors;
    }
    return out;
}

}  // namespace pfrep

#endif
