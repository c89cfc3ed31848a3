#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace gradim {

// Exact scalar types. All symbolic computation in this library runs on
// arbitrary-precision integers and rationals; no operation here ever rounds.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with any signs, canonicalized (lowest terms, positive denominator).
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    return Rational(num, den);
}

inline BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt int_pow(const BigInt& base, long exp) {
    if (exp < 0) throw std::domain_error("int_pow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

// base^exp for rational base; negative exponents allowed when base != 0.
inline Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp > 0) return Rational(0);
        throw std::domain_error("rational_pow: 0 to negative power");
    }
    const long e = exp < 0 ? -exp : exp;
    Rational r = make_rational(int_pow(numerator(base), e), int_pow(denominator(base), e));
    if (exp < 0) r = Rational(1) / r;
    return r;
}

// Natural log of a positive big integer, usable far past double overflow.
// Takes the top 62 bits as mantissa; the rest contributes via the bit shift.
inline double log_of(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log_of: nonpositive argument");
    const unsigned bits = boost::multiprecision::msb(v);
    const unsigned shift = bits > 62 ? bits - 62 : 0;
    const double mant = BigInt(v >> shift).convert_to<double>();
    return std::log(mant) + static_cast<double>(shift) * std::log(2.0);
}

// Decimal rendering: "num" when the denominator is 1, else "num/den".
inline std::string to_plain_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace gradim
