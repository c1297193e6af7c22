#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mdr {

// Exact arithmetic base types. GMP supplies arbitrary precision; mpq_class
// values are kept canonical (den > 0, gcd(|num|, den) = 1, zero is 0/1).
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

// Accepts "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
    Rational q;
    try {
        q = Rational(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

}  // namespace mdr
