#include "internal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "hyperdet/error.hpp"

namespace hyperdet::detail {

Polynomial relabel(const Polynomial& raw, const MDMatrix& local) {
  if (!local.is_symbolic()) throw Error(ErrorKind::WrongFormat, "relabel needs a symbolic matrix");
  const auto& e = local.polys();
  const bool plain = std::all_of(e.begin(), e.end(), [](const Polynomial& p) {
    return p.size() == 1 && p.terms()[0].coeff == 1 && p.terms()[0].monomial.degree() == 1;
  });
  auto entry = [&](EntryVar v) -> const Polynomial& { return e[local.offset(v.index())]; };
  if (!plain) return substitute(raw, [&](EntryVar v) { return entry(v); });
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw.terms()) {
    std::vector<Monomial::Factor> f;
    for (const auto& [v, x] : t.monomial.factors()) f.emplace_back(entry(v).terms()[0].monomial.factors()[0].first, x);
    terms.push_back({Monomial::from_factors(std::move(f)), t.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

void normalize(Polynomial& p, const Monomial& anchor, Normalization& record) {
  record = Normalization{};
  if (p.is_zero()) {
    record.content = 0;
    return;
  }
  Integer lead = p.coefficient(anchor);
  record.anchor = anchor.to_string();
  if (lead == 0) {
    lead = p.terms().front().coeff;
    record.anchor = p.terms().front().monomial.to_string();
  }
  record.content = p.content();
  record.sign = sgn(lead) < 0 ? -1 : 1;
  if (record.content != 1) {
    std::vector<Term> terms = p.terms();
    for (auto& t : terms) t.coeff = exact_quotient(t.coeff, record.content);
    p = Polynomial::from_terms(std::move(terms));
  }
  if (record.sign < 0) p = -p;
}

std::vector<Integer> clear_denominators(const std::vector<Rational>& values, Integer& scale) {
  scale = 1;
  for (const auto& v : values) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(exact_quotient(Integer(v.get_num() * scale), Integer(v.get_den())));
  return out;
}

UniPoly<Rational> interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  // Newton divided differences on the nodes 0, 1, ..., n-1.
  std::vector<Rational> dd = values;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(j);
  UniPoly<Rational> out(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    // out = out * (z - i) + dd[i]
    UniPoly<Rational> next(n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
      if (sgn(out[c]) == 0) continue;
      if (c + 1 < n) next[c + 1] += out[c];
      next[c] -= out[c] * static_cast<long>(i);
    }
    next[0] += dd[i];
    out = std::move(next);
  }
  return out;
}

const PermTable& perm_table(std::size_t n) {
  if (n > 9) throw Error(ErrorKind::SizeGuard, "permutation group of " + std::to_string(n) + " elements is too large");
  static std::mutex mutex;
  static std::map<std::size_t, PermTable> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PermTable t;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    t.perms.push_back(p);
    t.signs.push_back(perm_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(t)).first->second;
}

MDMatrix move_axis_last(const MDMatrix& reduced, std::size_t distinguished) {
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < reduced.arity(); ++k)
    if (k != distinguished) order.push_back(k);
  order.push_back(distinguished);
  return reduced.permuted(order);
}

}  // namespace hyperdet::detail
