#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tbcurv/rational_function.hpp"

namespace tbcurv {

// Metric expression grammar:
//
//   expr   := poly ( "/" poly )?
//   poly   := ( "+" | "-" )? term ( ("+"|"-") term )*
//   term   := coeff ( "*"? name )? ( "*"? "t" ( "^" uint )? )?
//           | name ( "*"? "t" ( "^" uint )? )?
//           | "t" ( "^" uint )?
//   coeff  := uint ( "." digits )? | uint "/" uint
//   name   := identifier other than "t" (template placeholder)
//
// Whitespace is insignificant; decimals parse exactly (0.01 -> 1/100).
// The "/" is ambiguous between a rational coefficient and the
// numerator/denominator split; it binds as a coefficient exactly when
// followed by an integer and then '*', 't' or an identifier, so
// "1/2*t" is t/2 while "1/1+2t" is 1/(1+2t) and "1/100" is 1/100.

/// One parsed monomial: coefficient, optional placeholder factor, t-power.
struct TemplateTerm {
    Rational coefficient;
    std::optional<std::string> placeholder;
    unsigned power = 0;
};

/// Parsed expression with optional named placeholders, instantiable to a
/// RationalFunction once every placeholder has a rational value.
struct ExpressionTemplate {
    std::vector<TemplateTerm> numerator;
    std::vector<TemplateTerm> denominator;  // empty means 1

    std::set<std::string> placeholders() const {
        std::set<std::string> names;
        for (const auto& t : numerator)
            if (t.placeholder) names.insert(*t.placeholder);
        for (const auto& t : denominator)
            if (t.placeholder) names.insert(*t.placeholder);
        return names;
    }
};

namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    ExpressionTemplate parse() {
        ExpressionTemplate expr;
        expr.numerator = parse_poly();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            expr.denominator = parse_poly();
        }
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
        return expr;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_digit() {
        skip_ws();
        return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    bool at_ident() {
        skip_ws();
        return !eof() &&
               (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_');
    }

    std::string read_digits() {
        skip_ws();
        std::string d;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) d += text_[pos_++];
        if (d.empty()) fail("expected digits");
        return d;
    }

    std::string read_identifier() {
        skip_ws();
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            name += text_[pos_++];
        if (name.empty()) fail("expected identifier");
        return name;
    }

    /// uint ("." digits)?, plus the coefficient-level "/" when the lookahead
    /// says the denominator integer is followed by '*', 't' or a name.
    Rational parse_coeff() {
        Rational value{integer_from_digits(read_digits())};
        if (!eof() && peek() == '.') {
            ++pos_;
            const std::string frac = read_digits();
            Integer scale = 1;
            for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
            value += Rational(integer_from_digits(frac), scale);
            return value;
        }
        skip_ws();
        if (!eof() && peek() == '/') {
            const std::size_t mark = pos_;
            ++pos_;
            skip_ws();
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::string den = read_digits();
                if (!eof() && peek() == '.') {
                    pos_ = mark;  // decimals are not coefficient denominators
                    return value;
                }
                skip_ws();
                const bool binds =
                    !eof() && (peek() == '*' ||
                               std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_');
                if (binds) {
                    const Integer d = integer_from_digits(den);
                    if (d == 0) fail("zero coefficient denominator");
                    return value / Rational(d);
                }
                pos_ = mark;
            } else {
                pos_ = mark;
            }
        }
        return value;
    }

    TemplateTerm parse_term() {
        TemplateTerm term;
        term.coefficient = Rational(1);
        bool have_any = false;

        const auto consume_star = [&] {
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                if (!at_ident()) fail("expected 't' or an identifier after '*'");
            }
        };

        if (at_digit()) {
            term.coefficient = parse_coeff();
            have_any = true;
            consume_star();
        }
        if (at_ident()) {
            const std::size_t mark = pos_;
            const std::string name = read_identifier();
            if (name == "t") {
                pos_ = mark;  // handled below
            } else {
                term.placeholder = name;
                have_any = true;
                consume_star();
            }
        }
        if (at_ident()) {
            const std::size_t mark = pos_;
            const std::string name = read_identifier();
            if (name != "t") fail("unexpected identifier '" + name + "'");
            (void)mark;
            term.power = 1;
            have_any = true;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                term.power = static_cast<unsigned>(std::stoul(read_digits()));
            }
        }
        if (!have_any) fail("expected a term");
        return term;
    }

    std::vector<TemplateTerm> parse_poly() {
        std::vector<TemplateTerm> terms;
        skip_ws();
        int sign = 1;
        if (!eof() && (peek() == '+' || peek() == '-')) {
            if (peek() == '-') sign = -1;
            ++pos_;
        }
        while (true) {
            TemplateTerm term = parse_term();
            if (sign < 0) term.coefficient = -term.coefficient;
            terms.push_back(std::move(term));
            skip_ws();
            if (eof() || (peek() != '+' && peek() != '-')) break;
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        return terms;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Polynomial instantiate_poly(const std::vector<TemplateTerm>& terms,
                                   const std::map<std::string, Rational>& values) {
    if (terms.empty()) return Polynomial(Rational(1));
    Polynomial p;
    for (const auto& term : terms) {
        Rational c = term.coefficient;
        if (term.placeholder) {
            const auto it = values.find(*term.placeholder);
            if (it == values.end())
                throw std::invalid_argument("no value for placeholder '" + *term.placeholder + "'");
            c *= it->second;
        }
        p += Polynomial::monomial(c, term.power);
    }
    return p;
}

}  // namespace detail

inline ExpressionTemplate parse_template(std::string_view text) {
    return detail::ExpressionParser(text).parse();
}

inline RationalFunction instantiate(const ExpressionTemplate& expr,
                                    const std::map<std::string, Rational>& values) {
    const Polynomial num = detail::instantiate_poly(expr.numerator, values);
    if (expr.denominator.empty()) return RationalFunction(num);
    const Polynomial den = detail::instantiate_poly(expr.denominator, values);
    if (den.is_zero()) throw std::invalid_argument("expression denominator is identically zero");
    return {num, den};
}

/// Parses a closed expression (no placeholders) to a rational function.
inline RationalFunction parse_rational_function(std::string_view text) {
    const ExpressionTemplate expr = parse_template(text);
    if (const auto names = expr.placeholders(); !names.empty())
        throw parse_error("unbound placeholder '" + *names.begin() + "'", 0);
    return instantiate(expr, {});
}

}  // namespace tbcurv
