#ifndef HYPERDET_UNIVARIATE_HPP
#define HYPERDET_UNIVARIATE_HPP

#include <cstddef>
#include <vector>

#include "hyperdet/error.hpp"
#include "hyperdet/linalg.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Univariate polynomial in z; coeffs[i] is the coefficient of z^i.
template <class R>
using UniPoly = std::vector<R>;

/// Index of the highest nonzero coefficient, -1 for the zero polynomial.
template <class R>
int uni_degree(const UniPoly<R>& p) {
  for (std::size_t i = p.size(); i-- > 0;) {
    if (!is_zero(p[i])) return static_cast<int>(i);
  }
  return -1;
}

inline Rational scale_by(const Rational& c, long k) { return c * k; }
inline Polynomial scale_by(const Polynomial& c, long k) { return c.scaled(Integer(k)); }

template <class R>
UniPoly<R> uni_derivative(const UniPoly<R>& p) {
  UniPoly<R> d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    R c = p[i];
    d.push_back(scale_by(c, static_cast<long>(i)));
  }
  return d;
}

/// Sylvester matrix of (p, q) in z: deg q shifted rows of p followed by deg p
/// shifted rows of q, coefficients from the top degree down.
template <class R>
std::vector<R> sylvester_matrix(const UniPoly<R>& p, const UniPoly<R>& q, std::size_t& size) {
  const int m = uni_degree(p);
  const int n = uni_degree(q);
  size = static_cast<std::size_t>(m + n);
  std::vector<R> s(size * size, R(0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i <= m; ++i) s[r * size + r + i] = p[m - i];
  }
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= n; ++i) s[(n + r) * size + r + i] = q[n - i];
  }
  return s;
}

/// Res(p, q) as the determinant of the Sylvester matrix, by fraction-free
/// elimination. Throws Error{BothConstant} if neither has positive degree.
template <class R>
R sylvester_resultant(const UniPoly<R>& p, const UniPoly<R>& q) {
  const int m = uni_degree(p);
  const int n = uni_degree(q);
  if (m <= 0 && n <= 0) throw Error(ErrorKind::BothConstant, "resultant of two constants");
  if (m < 0 || n < 0) return R(0);
  std::size_t size = 0;
  auto s = sylvester_matrix(p, q, size);
  return bareiss_determinant(std::move(s), size);
}

/// D(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p) for n = deg p >= 2.
/// Throws Error{WrongShape} for degree < 2.
template <class R>
R univariate_discriminant(const UniPoly<R>& p) {
  const int n = uni_degree(p);
  if (n < 2) throw Error(ErrorKind::WrongShape, "discriminant needs degree >= 2");
  if (n == 2) return p[1] * p[1] - scale_by(p[2] * p[0], 4);
  if (n == 3) {
    const R& a = p[3];
    const R& b = p[2];
    const R& c = p[1];
    const R& d = p[0];
    R bc = b * c;
    R ad = a * d;
    return bc * bc - scale_by(a * c * c * c, 4) - scale_by(b * b * b * d, 4) - scale_by(ad * ad, 27) +
           scale_by(ad * bc, 18);
  }
  R res = sylvester_resultant(p, uni_derivative(p));
  R d = exact_quotient(res, p[n]);
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

/// Discriminant of the binary form sum c_i z^i w^(n-i) of formal degree
/// n = coeffs.size() - 1, valid also when the top coefficients vanish. The form
/// is moved by an integer unimodular shear until its z^n coefficient is nonzero;
/// the discriminant is invariant under that substitution.
Rational binary_form_discriminant(const std::vector<Rational>& coeffs);

}  // namespace hyperdet

#endif  // HYPERDET_UNIVARIATE_HPP
