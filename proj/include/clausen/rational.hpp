#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>
#include <string>

#include "clausen/errors.hpp"

namespace clausen {

using Integer  = boost::multiprecision::cpp_int;
// Canonical form is maintained by the backend: gcd(num, den) = 1, den > 0,
// zero is 0/1.  The stream format is exactly the wire format we need
// ("p/q", q omitted when 1), so parsing/printing wrap it with validation.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Strict "p/q" parser: optional leading '-', decimal digits, optional "/q".
inline Rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> Rational {
        throw invalid_instance("not a rational literal: '" + text + "'");
    };
    if (text.empty()) return bad();
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++digits; }
    if (digits == 0) return bad();
    if (i < text.size()) {
        if (text[i] != '/') return bad();
        ++i;
        std::size_t den_digits = 0;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) { ++i; ++den_digits; }
        if (den_digits == 0 || i != text.size()) return bad();
        if (Integer(text.substr(den_start)) == 0)
            throw invalid_instance("zero denominator: '" + text + "'");
    }
    return Rational(text);
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// True for 0, -1, -2, ...
inline bool is_nonpositive_integer(const Rational& r) { return is_integer(r) && r <= 0; }

inline bool is_negative_integer(const Rational& r) { return is_integer(r) && r < 0; }

/// Checked conversion of an integer-valued Rational to long long.
inline long long to_long_long(const Rational& r) {
    if (!is_integer(r)) throw invalid_instance("expected an integer, got " + to_string(r));
    const Integer n = numerator(r);
    if (n > (std::numeric_limits<long long>::max)() || n < (std::numeric_limits<long long>::min)())
        throw invalid_instance("integer out of range: " + to_string(r));
    return n.convert_to<long long>();
}

inline long double to_real(const Rational& r) { return r.convert_to<long double>(); }

inline Integer floor_int(const Rational& r) {
    Integer q = numerator(r) / denominator(r); // truncates toward zero
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// r - floor(r), always in [0, 1).
inline Rational fractional_part(const Rational& r) { return r - Rational(floor_int(r)); }

} // namespace clausen
