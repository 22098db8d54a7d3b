#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cosmetic {

using Integer = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

inline Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    // The two-argument constructor rejects negative denominators.
    if (den < 0) return Rational(-Integer(num), -Integer(den));
    return Rational(Integer(num), Integer(den));
}

// Greatest integer not exceeding x.
inline Integer floor_of(const Rational& x) {
    const Integer n = numerator_of(x);
    const Integer d = denominator_of(x);
    Integer q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

inline int sign_of(const Rational& x) { return x.sign(); }

// "a/b", or just "a" when the value is an integer.
inline std::string to_string(const Rational& x) {
    if (is_integer(x)) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

// Accepts "a", "-a", "a/b".
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(Integer(text.substr(0, slash))) / Rational(den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

inline std::int64_t to_int64(const Integer& x) {
    if (x > Integer(INT64_MAX) || x < Integer(INT64_MIN))
        throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
    return static_cast<std::int64_t>(x);
}

}  // namespace cosmetic
