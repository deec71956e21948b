#include <algorithm>
#include <numeric>

#include "hyperdet/error.hpp"
#include "internal.hpp"

namespace hyperdet {

namespace {

DetResult single_entry(const MDMatrix& a) {
  DetResult r;
  r.format = a.format();
  r.method = DetMethod::Entry;
  if (a.is_symbolic()) r.polynomial = a.polys()[0];
  else r.value = a.values()[0];
  return r;
}

}  // namespace

DetResult det_2d(const MDMatrix& a, const DetOptions& options) {
  const MDMatrix r = a.reduced();
  if (r.arity() == 0) return single_entry(a);
  if (r.arity() != 2 || r.format()[0] != r.format()[1])
    throw Error(ErrorKind::NotSquare, a.format().to_string() + " does not reduce to a square format");
  const auto n = static_cast<std::size_t>(r.format()[0]);

  DetResult out;
  out.format = a.format();
  out.method = DetMethod::Square;
  out.normalization.anchor = "main diagonal";
  if (!r.is_symbolic()) {
    out.value = bareiss_determinant(r.values(), n);
    return out;
  }

  std::size_t count = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    count *= i;
    if (count > options.max_terms)
      throw Error(ErrorKind::SizeGuard, "Leibniz expansion of order " + std::to_string(n) + " exceeds the term cap");
  }
  std::vector<Term> terms;
  terms.reserve(count);
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    std::vector<Monomial::Factor> f;
    for (std::size_t i = 0; i < n; ++i) f.emplace_back(EntryVar{static_cast<int>(i + 1), static_cast<int>(p[i] + 1)}, 1u);
    terms.push_back({Monomial::from_factors(std::move(f)), Integer(perm_sign(p))});
  } while (std::next_permutation(p.begin(), p.end()));
  out.polynomial = detail::relabel(Polynomial::from_terms(std::move(terms)), r);
  return out;
}

}  // namespace hyperdet
