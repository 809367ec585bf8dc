#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace cobweb {

/// Arbitrary-precision integer. Every F-term, factorial and F-nomial uses it.
using Integer = mpz_class;
/// Exact rational, always kept in canonical (reduced) form.
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Integer pow(const Integer& base, unsigned long exp)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline Rational pow(const Rational& base, unsigned long exp)
{
    Rational out(1);
    for (unsigned long i = 0; i < exp; ++i) out *= base;
    return out;
}

/// Exact quotient a / b. Returns false (leaving `out` untouched) when b does
/// not divide a.
inline bool divides_exactly(const Integer& a, const Integer& b, Integer& out)
{
    if (b == 0) return false;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

} // namespace cobweb
