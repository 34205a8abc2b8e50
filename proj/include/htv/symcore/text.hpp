#ifndef HTV_SYMCORE_TEXT_HPP
#define HTV_SYMCORE_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "htv/error.hpp"
#include "htv/symcore/polynomial.hpp"

namespace htv {

namespace detail {

inline std::string monomial_text(const Exponent& e) {
    std::string out;
    for (Variable v : kAllVariables) {
        const unsigned power = e[index_of(v)];
        if (power == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += name_of(v);
        if (power > 1) {
            out += '^';
            out += std::to_string(power);
        }
    }
    return out;
}

}  // namespace detail

/**
 * Canonical rendering: descending graded-lex terms joined by " + " / " - ",
 * reduced fractions, "1*" and unit denominators omitted. The zero
 * polynomial renders as "0".
 *
 *     2k - a  ->  "-a + 2*k"
 */
inline std::string canonical_text(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = abs(c);
        const std::string monomial = detail::monomial_text(e);
        if (monomial.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += monomial;
        } else {
            out += to_string(magnitude);
            out += '*';
            out += monomial;
        }
    }
    return out;
}

namespace detail {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) {
            throw ParseError("empty polynomial", pos_);
        }
        Polynomial result;
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                throw ParseError(std::string("expected '+' or '-', found '") + peek() + "'", pos_);
            }
            first = false;
            auto [exponent, coefficient] = parse_term();
            if (sign < 0) {
                coefficient = -coefficient;
            }
            result.add_term(exponent, coefficient);
        }
        return result;
    }

private:
    std::pair<Exponent, Rational> parse_term() {
        skip_space();
        Rational coefficient(1);
        Exponent exponent{};
        bool have_factor = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = parse_coefficient();
            have_factor = true;
            skip_space();
            if (at_end() || peek() != '*') {
                return {exponent, coefficient};
            }
            ++pos_;
            skip_space();
        }
        while (true) {
            const std::size_t start = pos_;
            const Variable v = parse_variable();
            unsigned power = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                power = parse_unsigned();
                skip_space();
            }
            const unsigned updated = exponent[index_of(v)] + power;
            if (updated > 0xFFFFu) {
                throw ParseError("exponent too large", start);
            }
            exponent[index_of(v)] = static_cast<std::uint16_t>(updated);
            have_factor = true;
            if (at_end() || peek() != '*') {
                break;
            }
            ++pos_;
            skip_space();
        }
        if (!have_factor) {
            throw ParseError("empty term", pos_);
        }
        return {exponent, coefficient};
    }

    Rational parse_coefficient() {
        const std::size_t start = pos_;
        std::string digits = read_digits();
        skip_space();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_space();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw ParseError("expected denominator", pos_);
            }
            digits += '/';
            digits += read_digits();
        }
        return parse_rational(digits, start);
    }

    std::string read_digits() {
        std::string out;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            out += peek();
            ++pos_;
        }
        return out;
    }

    unsigned parse_unsigned() {
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<unsigned>(peek() - '0');
            if (value > 0xFFFFu) {
                throw ParseError("exponent too large", start);
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected exponent", pos_);
        }
        return static_cast<unsigned>(value);
    }

    Variable parse_variable() {
        const std::size_t start = pos_;
        if (at_end()) {
            throw ParseError("expected variable", pos_);
        }
        // Two-character names first: b2 b3 k2 k3 d2 d3.
        if (pos_ + 1 < text_.size()) {
            if (auto v = variable_from_name(text_.substr(pos_, 2)); v && name_of(*v).size() == 2) {
                pos_ += 2;
                return *v;
            }
        }
        if (auto v = variable_from_name(text_.substr(pos_, 1))) {
            ++pos_;
            if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
                throw ParseError("unknown variable", start);
            }
            return *v;
        }
        throw ParseError(std::string("unknown variable starting with '") + peek() + "'", start);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the polynomial text grammar. Throws ParseError with a position.
inline Polynomial parse_polynomial(std::string_view text) {
    return detail::PolynomialParser(text).parse();
}

}  // namespace htv

#endif  // HTV_SYMCORE_TEXT_HPP
