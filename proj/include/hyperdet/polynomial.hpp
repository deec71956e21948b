#ifndef HYPERDET_POLYNOMIAL_HPP
#define HYPERDET_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdet/monomial.hpp"
#include "hyperdet/rational.hpp"

namespace hyperdet {

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.monomial == b.monomial && a.coeff == b.coeff; }
};

/// Sparse polynomial with integer coefficients in entry variables.
///
/// Canonical form: no zero coefficients, monomials strictly increasing in the
/// lex order of Monomial. Equal polynomials therefore have identical term
/// vectors and identical text renderings.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Integer constant);
  static Polynomial variable(EntryVar v);
  static Polynomial monomial(Monomial m, Integer coeff = 1);
  /// Accepts terms in any order with repeats and zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Greatest term in the monomial order. Undefined on zero.
  const Term& leading_term() const { return terms_.back(); }

  Integer coefficient(const Monomial& m) const;
  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  Integer content() const;
  std::vector<EntryVar> variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);

  Polynomial scaled(const Integer& c) const;
  Polynomial times_monomial(const Monomial& m, const Integer& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// "±C*a[i,j,k]^e*..." in canonical term order; the zero polynomial renders "0".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_neg(const Polynomial& p);
Polynomial poly_scale(const Polynomial& p, const Integer& c);

/// Returns r with p = q * r over the integers, or throws Error{NotDivisible}.
/// Throws Error{NotDivisible} as well for q = 0.
Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q);
inline Polynomial exact_quotient(const Polynomial& p, const Polynomial& q) { return poly_exact_div(p, q); }

using Assignment = std::map<EntryVar, Rational>;

/// Throws Error{MissingVariable} if some variable of p is unassigned.
Rational poly_eval(const Polynomial& p, const Assignment& assignment);
Rational poly_eval(const Polynomial& p, const std::function<Rational(EntryVar)>& value);

/// Replaces every variable v by image(v).
Polynomial substitute(const Polynomial& p, const std::function<Polynomial(EntryVar)>& image);

/// Inverse of Polynomial::to_string. Also accepts the compact "a{123}" variable
/// spelling and surrounding whitespace. Throws Error{Parse}.
Polynomial parse_polynomial(std::string_view text);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

}  // namespace hyperdet

#endif  // HYPERDET_POLYNOMIAL_HPP
