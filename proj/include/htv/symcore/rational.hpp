#ifndef HTV_SYMCORE_RATIONAL_HPP
#define HTV_SYMCORE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "htv/error.hpp"

namespace htv {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, and zero as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// "3/2", "-5", "0".
inline std::string to_string(const Rational& value) { return value.get_str(10); }

/// Parses "p" or "p/q" (optional leading sign on p). Throws ParseError.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
    if (text.empty()) {
        throw ParseError("empty rational", offset);
    }
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        ++i;
    }
    std::size_t digits = 0;
    std::size_t slash = std::string_view::npos;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch >= '0' && ch <= '9') {
            ++digits;
        } else if (ch == '/' && slash == std::string_view::npos && digits > 0) {
            slash = i;
            digits = 0;
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "' in rational", offset + i);
        }
    }
    if (digits == 0) {
        throw ParseError("missing digits in rational", offset + text.size());
    }
    std::string body(text[0] == '+' ? text.substr(1) : text);
    Rational value;
    if (value.set_str(body, 10) != 0) {
        throw ParseError("invalid rational", offset);
    }
    if (value.get_den() == 0) {
        throw ParseError("zero denominator", offset + slash);
    }
    value.canonicalize();
    return value;
}

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

}  // namespace htv

#endif  // HTV_SYMCORE_RATIONAL_HPP
