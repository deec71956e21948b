#include "hyperdet/oracles.hpp"

#include <algorithm>

#include "hyperdet/error.hpp"
#include "hyperdet/rng.hpp"
#include "internal.hpp"

namespace hyperdet {

RationalMatrix critical_system(const Format& f, const DegeneracyWitness& x) {
  if (x.vectors.size() != f.arity()) throw Error(ErrorKind::WrongShape, "one witness vector per direction required");
  for (std::size_t k = 0; k < f.arity(); ++k)
    if (x.vectors[k].size() != static_cast<std::size_t>(f[k])) throw Error(ErrorKind::WrongShape, "witness vector length mismatch");
  std::size_t rows = 0;
  std::vector<std::size_t> row_base;
  for (int n : f.dims()) {
    row_base.push_back(rows);
    rows += static_cast<std::size_t>(n);
  }
  RationalMatrix m(rows, f.volume());
  const MDMatrix shape = MDMatrix::numeric(f, std::vector<Rational>(f.volume()));
  for (std::size_t off = 0; off < f.volume(); ++off) {
    const auto idx = shape.index_of(off);
    for (std::size_t k = 0; k < f.arity(); ++k) {
      Rational c = 1;
      for (std::size_t j = 0; j < f.arity(); ++j)
        if (j != k) c *= x.vectors[j][static_cast<std::size_t>(idx[j] - 1)];
      m(row_base[k] + static_cast<std::size_t>(idx[k] - 1), off) = c;
    }
  }
  return m;
}

std::pair<MDMatrix, DegeneracyWitness> make_degenerate(const Format& f, std::uint64_t seed) {
  if (!admits_determinant(f)) throw Error(ErrorKind::WrongFormat, f.to_string() + " admits no determinant");
  SeededRng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    DegeneracyWitness x;
    for (int n : f.dims()) {
      std::vector<Rational> v;
      for (int i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng.uniform_int(1, 20)));
      x.vectors.push_back(std::move(v));
    }
    const auto basis = nullspace_exact(critical_system(f, x));
    if (basis.empty()) continue;
    std::vector<Rational> entries(f.volume(), Rational(0));
    for (const auto& b : basis) {
      const Rational c(static_cast<long>(rng.uniform_int(-10, 10)));
      for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += c * b[i];
    }
    if (std::all_of(entries.begin(), entries.end(), [](const Rational& r) { return sgn(r) == 0; })) continue;
    Integer scale;
    auto ints = detail::clear_denominators(entries, scale);
    Integer content = 0;
    for (const auto& z : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = Rational(exact_quotient(ints[i], content));
    return {MDMatrix::numeric(f, std::move(entries)), std::move(x)};
  }
  throw Error(ErrorKind::DegenerateSample, "could not draw a nonzero degenerate matrix of format " + f.to_string());
}

Rational evaluate_at(const Polynomial& p, const MDMatrix& a) {
  return poly_eval(p, [&](EntryVar v) { return a.value(v.index()); });
}

bool witness_check(const MDMatrix& a, const DegeneracyWitness& x) {
  if (x.vectors.size() != a.arity()) return false;
  for (std::size_t k = 0; k < a.arity(); ++k) {
    if (x.vectors[k].size() != static_cast<std::size_t>(a.format()[k])) return false;
    for (const auto& c : x.vectors[k])
      if (sgn(c) == 0) return false;
  }
  const RationalMatrix m = critical_system(a.format(), x);
  const auto& v = a.values();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) s += m(i, j) * v[j];
    if (sgn(s) != 0) return false;
  }
  return true;
}

MDMatrix gl_action(const MDMatrix& a, std::size_t axis, const RationalMatrix& g) {
  if (axis >= a.arity()) throw Error(ErrorKind::WrongShape, "direction out of range");
  const auto n = static_cast<std::size_t>(a.format()[axis]);
  if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::WrongShape, "g must be n_k x n_k");
  if (sgn(determinant(g)) == 0) throw Error(ErrorKind::Singular, "g is not invertible");
  if (a.is_symbolic())
    for (const auto& c : g.entries())
      if (!is_integral(c)) throw Error(ErrorKind::WrongShape, "symbolic matrices need an integral g");

  const std::size_t size = a.size();
  std::vector<Rational> nv;
  std::vector<Polynomial> pv;
  for (std::size_t off = 0; off < size; ++off) {
    auto idx = a.index_of(off);
    const auto i = static_cast<std::size_t>(idx[axis] - 1);
    Rational rs = 0;
    Polynomial ps(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(g(i, j)) == 0) continue;
      idx[axis] = static_cast<int>(j + 1);
      if (a.is_symbolic()) ps += a.polys()[a.offset(idx)].scaled(Integer(g(i, j).get_num()));
      else rs += g(i, j) * a.values()[a.offset(idx)];
    }
    if (a.is_symbolic()) pv.push_back(std::move(ps));
    else nv.push_back(std::move(rs));
  }
  return a.is_symbolic() ? MDMatrix::polynomial(a.format(), std::move(pv)) : MDMatrix::numeric(a.format(), std::move(nv));
}

RationalMatrix random_unimodular(std::size_t n, SeededRng& rng, int steps) {
  RationalMatrix g = RationalMatrix::identity(n);
  if (n < 2) return g;
  const auto hi = static_cast<std::int64_t>(n) - 1;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform_int(0, hi));
    auto j = static_cast<std::size_t>(rng.uniform_int(0, hi - 1));
    if (j >= i) ++j;
    long c = static_cast<long>(rng.uniform_int(-3, 2));
    if (c >= 0) ++c;
    for (std::size_t col = 0; col < n; ++col) g(i, col) += g(j, col) * c;
  }
  return g;
}

CorankReport corank_22n(const MDMatrix& a) {
  const Format& f = a.format();
  if (f.arity() != 3 || f[0] != 2 || f[1] != 2) throw Error(ErrorKind::WrongFormat, "corank_22n needs format 2 x 2 x n");
  const auto n = static_cast<std::size_t>(f[2]);
  auto at = [&](int r, int c, std::size_t i) { return a.value(std::vector<int>{r, c, static_cast<int>(i + 1)}); };
  RationalMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = (at(1, 1, i) * at(2, 2, j) + at(1, 1, j) * at(2, 2, i) - at(1, 2, i) * at(2, 1, j) -
                    at(1, 2, j) * at(2, 1, i)) /
                   2;
  CorankReport r;
  r.rank = symmetric_rank(gram);
  r.corank_one = r.rank == 2;
  return r;
}

namespace {

Rational column_minor(const RationalMatrix& s, const Subset& cols) {
  const std::size_t n = s.rows();
  std::vector<Rational> m;
  m.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (int c : cols) m.push_back(s(i, static_cast<std::size_t>(c - 1)));
  return bareiss_determinant(std::move(m), n);
}

void trim(UniPoly<Rational>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UniPoly<Rational> uni_rem(UniPoly<Rational> a, const UniPoly<Rational>& b) {
  trim(a);
  const int db = uni_degree(b);
  while (uni_degree(a) >= db) {
    const int da = uni_degree(a);
    const Rational c = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Rational uni_eval(const UniPoly<Rational>& p, const Rational& t) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

int sign_changes(const std::vector<UniPoly<Rational>>& seq, const Rational& t) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    const int s = sgn(uni_eval(p, t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

std::optional<Rational> rational_root(const UniPoly<Rational>& p) {
  if (sgn(p[0]) == 0) return Rational(0);
  Integer scale;
  const auto ints = detail::clear_denominators(p, scale);
  const Integer limit("1000000000000");
  if (abs(ints.front()) > limit || abs(ints.back()) > limit) return std::nullopt;
  const auto num = divisors(ints.front()), den = divisors(ints.back());
  for (const auto& a : num)
    for (const auto& b : den)
      for (int s : {1, -1}) {
        Rational t(a * s, b);
        t.canonicalize();
        if (sgn(uni_eval(p, t)) == 0) return t;
      }
  return std::nullopt;
}

}  // namespace

UniPoly<Rational> uni_gcd(UniPoly<Rational> a, UniPoly<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly<Rational> r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

int sturm_count(const UniPoly<Rational>& p, const Rational& lo, const Rational& hi) {
  std::vector<UniPoly<Rational>> seq{p, uni_derivative(p)};
  trim(seq[0]);
  trim(seq[1]);
  while (!seq.back().empty() && uni_degree(seq.back()) > 0) {
    UniPoly<Rational> r = uni_rem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<Rational> maximal_minors_pencil(const std::vector<RationalMatrix>& slices, const std::vector<Rational>& z) {
  if (slices.empty() || slices.size() != z.size()) throw Error(ErrorKind::WrongShape, "one coefficient per slice required");
  const std::size_t n = slices[0].rows(), m = slices[0].cols();
  if (n == 0 || n > m) throw Error(ErrorKind::WrongShape, "slices must be n x m with n <= m");
  RationalMatrix s(n, m);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (slices[i].rows() != n || slices[i].cols() != m) throw Error(ErrorKind::WrongShape, "slices differ in shape");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m; ++c) s(r, c) += z[i] * slices[i](r, c);
  }
  std::vector<Rational> out;
  for (const auto& cols : enumerate_subsets(static_cast<int>(m), static_cast<int>(n))) out.push_back(column_minor(s, cols));
  return out;
}

RankDropReport pencil_rank_drop_oracle(const RationalMatrix& b1, const RationalMatrix& b2) {
  const std::size_t n = b1.rows(), m = b1.cols();
  if (b2.rows() != n || b2.cols() != m || n == 0 || n >= m) throw Error(ErrorKind::WrongShape, "need two n x m matrices with n < m");
  RankDropReport report;
  auto point = [&](Rational z1, Rational z2) {
    report.exists = true;
    report.witness = RankDropWitness{};
    report.witness->point = std::make_pair(std::move(z1), std::move(z2));
    return report;
  };
  if (rank(b1) < n) return point(1, 0);

  // Each maximal minor of t*B1 + B2 is a polynomial of degree <= n in t.
  UniPoly<Rational> g;
  for (const auto& cols : enumerate_subsets(static_cast<int>(m), static_cast<int>(n))) {
    std::vector<Rational> samples;
    for (std::size_t t = 0; t <= n; ++t) {
      RationalMatrix s(n, m);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < m; ++c) s(r, c) = b1(r, c) * static_cast<long>(t) + b2(r, c);
      samples.push_back(column_minor(s, cols));
    }
    g = uni_gcd(g, detail::interpolate(samples));
    if (uni_degree(g) == 0) return report;
  }
  if (g.empty()) return point(0, 1);

  report.exists = true;
  if (auto t = rational_root(g)) return point(*t, 1);
  RankDropWitness w;
  // Square-free part, so that Sturm counts isolate distinct roots.
  const UniPoly<Rational> common = uni_gcd(g, uni_derivative(g));
  UniPoly<Rational> sf = g;
  if (uni_degree(common) > 0) {
    UniPoly<Rational> q(g.size(), Rational(0)), r = g;
    trim(r);
    const int dc = uni_degree(common);
    while (uni_degree(r) >= dc) {
      const int dr = uni_degree(r);
      const Rational c = r[static_cast<std::size_t>(dr)] / common[static_cast<std::size_t>(dc)];
      q[static_cast<std::size_t>(dr - dc)] = c;
      for (int i = 0; i <= dc; ++i) r[static_cast<std::size_t>(dr - dc + i)] -= c * common[static_cast<std::size_t>(i)];
      trim(r);
      if (r.empty()) break;
    }
    trim(q);
    sf = q;
  }
  w.defining_polynomial = sf;
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) bound = std::max(bound, Rational(abs(sf[i] / sf.back())));
  Rational lo = -(bound + 1), hi = bound + 1;
  if (sturm_count(sf, lo, hi) > 0) {
    for (int it = 0; it < 400 && sturm_count(sf, lo, hi) > 1; ++it) {
      const Rational mid = (lo + hi) / 2;
      if (sturm_count(sf, lo, mid) >= 1) hi = mid;
      else lo = mid;
    }
    w.real_interval = std::make_pair(lo, hi);
  }
  report.witness = std::move(w);
  return report;
}

std::vector<RationalMatrix> slices_as_matrices(const MDMatrix& a, std::size_t axis) {
  if (a.arity() != 3) throw Error(ErrorKind::WrongFormat, "slices_as_matrices needs a 3-dimensional matrix");
  std::vector<RationalMatrix> out;
  for (int i = 1; i <= a.format()[axis]; ++i) {
    const MDMatrix s = a.slice(axis, i);
    out.emplace_back(static_cast<std::size_t>(s.format()[0]), static_cast<std::size_t>(s.format()[1]), s.values());
  }
  return out;
}

PluckerVector hyperplucker(const MDMatrix& a, const DetOptions& options) {
  const FormatClass c = classify_format(a.format());
  if (c.kind != FormatKind::Grassman) throw Error(ErrorKind::WrongFormat, a.format().to_string() + " is not a grassman format");
  std::vector<std::size_t> kept;
  const Format r = a.format().reduced(&kept);
  if (kept.back() != *c.distinguished)
    throw Error(ErrorKind::WrongFormat, "the distinguished direction of " + a.format().to_string() + " must be the last one");
  const MDMatrix red = a.reduced();
  const std::vector<int> base_dims(r.dims().begin(), r.dims().end() - 1);
  const int m = r.dims().back();
  const int m_r = m_sequence(Format(base_dims)).back();

  std::vector<std::vector<int>> sel;
  for (int n : base_dims) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    sel.push_back(all);
  }
  sel.emplace_back();
  PluckerVector out;
  for (const auto& j : enumerate_subsets(m, m_r)) {
    sel.back() = j;
    DetResult d = det_dispatch(red.subtensor(sel), options);
    out.all_vanish = out.all_vanish && d.is_zero();
    out.coordinates.emplace_back(j, std::move(d));
  }
  return out;
}

}  // namespace hyperdet
