#include <algorithm>
#include <numeric>

#include "hyperdet/error.hpp"
#include "internal.hpp"

namespace hyperdet {

namespace {

/// Position of the pencil direction in a reduced format permuting to n x n x 2.
std::optional<std::size_t> pencil_axis(const Format& r) {
  if (r.arity() != 3) return std::nullopt;
  for (std::size_t k = 3; k-- > 0;) {
    if (r[k] != 2) continue;
    const int x = r[(k + 1) % 3], y = r[(k + 2) % 3];
    if (x == y) return k;
  }
  return std::nullopt;
}

/// det(A + zB) with A, B the two slices of the local n x n x 2 matrix of fresh variables.
UniPoly<Polynomial> symbolic_char_poly(std::size_t n) {
  UniPoly<Polynomial> total(n + 1, Polynomial(0));
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    UniPoly<Polynomial> prod{Polynomial(perm_sign(p))};
    for (std::size_t i = 0; i < n; ++i) {
      const int r = static_cast<int>(i + 1), c = static_cast<int>(p[i] + 1);
      const Polynomial a = Polynomial::variable(EntryVar{r, c, 1});
      const Polynomial b = Polynomial::variable(EntryVar{r, c, 2});
      UniPoly<Polynomial> next(prod.size() + 1, Polynomial(0));
      for (std::size_t d = 0; d < prod.size(); ++d) {
        next[d] += prod[d] * a;
        next[d + 1] += prod[d] * b;
      }
      prod = std::move(next);
    }
    for (std::size_t d = 0; d <= n; ++d) total[d] += prod[d];
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// prod_{i<j} a[i,i,1]^2 a[j,j,2]^2: coefficient +1 in the discriminant of det(A + zB).
Monomial pencil_anchor(std::size_t n) {
  std::vector<Monomial::Factor> f;
  for (std::size_t i = 1; i <= n; ++i) {
    const int ii = static_cast<int>(i);
    if (i < n) f.emplace_back(EntryVar{ii, ii, 1}, static_cast<std::uint32_t>(2 * (n - i)));
    if (i > 1) f.emplace_back(EntryVar{ii, ii, 2}, static_cast<std::uint32_t>(2 * (i - 1)));
  }
  return Monomial::from_factors(std::move(f));
}

}  // namespace

DetResult det_pencil_nn2(const MDMatrix& a, const DetOptions& options) {
  (void)options;
  const MDMatrix r = a.reduced();
  const auto axis = pencil_axis(r.format());
  if (!axis) throw Error(ErrorKind::WrongFormat, a.format().to_string() + " does not permute to n x n x 2");
  const MDMatrix local = detail::move_axis_last(r, *axis);
  const auto n = static_cast<std::size_t>(local.format()[0]);

  DetResult out;
  out.format = a.format();
  out.method = DetMethod::Pencil;
  if (local.is_symbolic()) {
    Polynomial disc = univariate_discriminant(symbolic_char_poly(n));
    detail::normalize(disc, pencil_anchor(n), out.normalization);
    out.polynomial = detail::relabel(disc, local);
    return out;
  }

  const MDMatrix A = local.slice(2, 1), B = local.slice(2, 2);
  std::vector<Rational> samples;
  for (std::size_t t = 0; t <= n; ++t) {
    std::vector<Rational> m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = A.values()[i] + B.values()[i] * static_cast<long>(t);
    samples.push_back(bareiss_determinant(std::move(m), n));
  }
  out.value = binary_form_discriminant(detail::interpolate(samples));
  out.normalization.anchor = pencil_anchor(n).to_string();
  return out;
}

}  // namespace hyperdet
