#ifndef HYPERDET_RATIONAL_HPP
#define HYPERDET_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperdet {

using Integer = mpz_class;
/// Always kept canonical: gcd(num, den) = 1, den >= 1, zero is 0/1.
using Rational = mpq_class;

/// num/den in canonical form; den must be nonzero.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Accepts "n" or "p/q" with optional sign; throws Error{Parse} otherwise and
/// Error{Parse} for a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "n" for integral values, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

/// Exact quotient in the field; used by the generic fraction-free routines.
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
/// Caller guarantees b divides a.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace hyperdet

#endif  // HYPERDET_RATIONAL_HPP
