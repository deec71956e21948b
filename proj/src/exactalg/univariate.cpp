#include "hyperdet/univariate.hpp"

namespace hyperdet {

Rational binary_form_discriminant(const std::vector<Rational>& coeffs) {
  if (coeffs.size() < 3) throw Error(ErrorKind::WrongShape, "binary form discriminant needs degree >= 2");
  const std::size_t n = coeffs.size() - 1;
  bool all_zero = true;
  for (const auto& c : coeffs) all_zero = all_zero && is_zero(c);
  if (all_zero) return 0;

  // P(z, 1 + t z) = sum_i c_i z^i (1 + t z)^(n-i); its z^n coefficient is P(1, t).
  for (long t = 0;; ++t) {
    UniPoly<Rational> shifted(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(coeffs[i])) continue;
      const std::size_t e = n - i;
      Integer binom = 1;
      Integer tpow = 1;
      for (std::size_t j = 0; j <= e; ++j) {
        shifted[i + j] += coeffs[i] * Rational(binom * tpow);
        binom = binom * Integer(static_cast<long>(e - j)) / Integer(static_cast<long>(j + 1));
        tpow *= t;
      }
    }
    if (!is_zero(shifted[n])) return univariate_discriminant(shifted);
  }
}

}  // namespace hyperdet
