#include "hyperdet/qpaths.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "hyperdet/error.hpp"

namespace hyperdet {

bool colex_less(const Subset& a, const Subset& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

std::vector<Subset> enumerate_subsets(int m, int size) {
  std::vector<Subset> out;
  if (size < 0 || size > m) return out;
  Subset s(size);
  std::iota(s.begin(), s.end(), 1);
  // Colex successor: bump the lowest element that can move up, reset those below it.
  while (true) {
    out.push_back(s);
    int i = 0;
    while (i < size && s[i] + 1 == (i + 1 < size ? s[i + 1] : m + 1)) ++i;
    if (i == size) break;
    ++s[i];
    for (int t = 0; t < i; ++t) s[t] = t + 1;
  }
  return out;
}

namespace {

std::size_t binomial_saturating(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > SIZE_MAX) return SIZE_MAX;
  }
  return static_cast<std::size_t>(r);
}

std::size_t mul_saturating(std::size_t a, std::size_t b) {
  if (a != 0 && b > SIZE_MAX / a) return SIZE_MAX;
  return a * b;
}

void check_size(std::size_t count, std::size_t cap, const char* what) {
  if (count > cap)
    throw Error(ErrorKind::SizeGuard, std::string(what) + " has " + (count == SIZE_MAX ? std::string("too many") : std::to_string(count)) +
                                          " elements, cap is " + std::to_string(cap));
}

int block_of(const Subset& q, int x) {
  return 1 + static_cast<int>(std::lower_bound(q.begin(), q.end(), x) - q.begin());
}

}  // namespace

std::size_t count_C(const Format& f) {
  const auto m = m_sequence(f);
  std::size_t c = 1;
  for (std::size_t k = 1; k <= f.arity(); ++k) c = mul_saturating(c, binomial_saturating(m[k], f[k - 1] - 1));
  return c;
}

std::vector<QSeq> enumerate_C(const Format& f, std::size_t cap) {
  QSpace space(f, cap);
  std::vector<QSeq> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back(space.seq(i));
  return out;
}

std::vector<int> order_iso(const Subset& q_next, int size_prev, int size_next) {
  if (size_next - static_cast<int>(q_next.size()) != size_prev)
    throw Error(ErrorKind::SizeMismatch, "|P_{k+1} \\ Q_{k+1}| differs from |P_k|");
  std::vector<int> f;
  f.reserve(size_prev);
  for (int x = 1; x <= size_next; ++x)
    if (!std::binary_search(q_next.begin(), q_next.end(), x)) f.push_back(x);
  if (static_cast<int>(f.size()) != size_prev) throw Error(ErrorKind::SizeMismatch, "Q_{k+1} is not a subset of P_{k+1}");
  return f;
}

QPath q_path(const Format& f, const QSeq& q) {
  const auto m = m_sequence(f);
  QPath p{1};
  for (std::size_t k = 1; k <= f.arity(); ++k) p.push_back(order_iso(q.q[k - 1], m[k - 1], m[k])[p.back() - 1]);
  return p;
}

std::vector<std::vector<int>> blocks(const Subset& q, int m_k, int n_k) {
  std::vector<std::vector<int>> r(n_k);
  for (int x = 1; x <= m_k; ++x) {
    if (std::binary_search(q.begin(), q.end(), x)) continue;
    r[block_of(q, x) - 1].push_back(x);
  }
  return r;
}

std::vector<int> induced_map(const std::vector<int>& phi, const Subset& q, int m_k, int n_k) {
  std::vector<int> sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error(ErrorKind::NotInjective, "map is not injective");
  std::vector<int> g;
  g.reserve(phi.size());
  for (int x : phi) {
    if (x < 1 || x > m_k || std::binary_search(q.begin(), q.end(), x))
      throw Error(ErrorKind::RangeViolation, "image " + std::to_string(x) + " outside P_k \\ Q_k");
    const int b = block_of(q, x);
    if (b > n_k) throw Error(ErrorKind::RangeViolation, "block label exceeds n_k");
    g.push_back(b);
  }
  return g;
}

std::vector<std::vector<int>> admissible_maps(const Subset& q, int m_prev, int m_k, int n_k, std::size_t cap) {
  std::size_t total = 1;
  for (int i = 0; i < m_prev; ++i) total = mul_saturating(total, static_cast<std::size_t>(n_k));
  check_size(total, cap, "the space of maps P_{k-1} -> T_k");
  std::vector<int> bound(n_k);
  const auto r = blocks(q, m_k, n_k);
  for (int i = 0; i < n_k; ++i) bound[i] = static_cast<int>(r[i].size());

  std::vector<std::vector<int>> out;
  std::vector<int> g(m_prev, 1);
  std::vector<int> used(n_k, 0);
  // Depth-first in lexicographic order, pruning on the fiber bounds.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m_prev) {
      out.push_back(g);
      return;
    }
    for (int i = 1; i <= n_k; ++i) {
      if (used[i - 1] == bound[i - 1]) continue;
      ++used[i - 1];
      g[pos] = i;
      self(self, pos + 1);
      --used[i - 1];
    }
  };
  rec(rec, 0);
  return out;
}

QDiagram initial_diagram(const Format& f, const QSeq& q) {
  const auto m = m_sequence(f);
  QDiagram d;
  for (std::size_t k = 1; k <= f.arity(); ++k)
    d.g.push_back(induced_map(order_iso(q.q[k - 1], m[k - 1], m[k]), q.q[k - 1], m[k], f[k - 1]));
  return d;
}

std::vector<int> path_over_diagram(const Format& f, const QSeq& source, const QDiagram& g) {
  const QPath p = q_path(f, source);
  std::vector<int> idx;
  for (std::size_t k = 1; k <= f.arity(); ++k) idx.push_back(g.g[k - 1][p[k - 1] - 1]);
  return idx;
}

int j_of(const Format& f, const QSeq& q) { return q_path(f, q).back(); }

std::vector<QSeq> conj_class(const Format& f, std::size_t k, const std::vector<Subset>& tail, int p_k) {
  if (k > f.arity() || tail.size() != f.arity() - k) throw Error(ErrorKind::WrongShape, "tail length must be d - k");
  QSpace space(f);
  std::vector<QSeq> out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (space.path(i, k) != p_k) continue;
    bool match = true;
    for (std::size_t j = k + 1; j <= f.arity() && match; ++j) match = space.level(j)[space.coord(i, j)] == tail[j - k - 1];
    if (match) out.push_back(space.seq(i));
  }
  return out;
}

std::vector<int> l_sequence(const Format& f, const QSeq& q) {
  QSpace space(f);
  const std::size_t i = space.index_of(q);
  std::vector<int> l;
  for (std::size_t k = 0; k <= f.arity(); ++k) l.push_back(space.l(i, k));
  return l;
}

std::string render_qseq(const Format& f, const QSeq& q) {
  const auto m = m_sequence(f);
  const QPath p = q_path(f, q);
  const QDiagram g = initial_diagram(f, q);
  std::string out;
  for (std::size_t k = f.arity() + 1; k-- > 0;) {
    out += "P" + std::to_string(k) + " ";
    for (int x = 1; x <= m[k]; ++x) {
      const bool crossed = k > 0 && std::binary_search(q.q[k - 1].begin(), q.q[k - 1].end(), x);
      char mark = crossed ? 'x' : 'o';
      if (p[k] == x) mark = '*';
      out += ' ';
      out += mark;
      if (k < f.arity()) out += std::to_string(g.g[k][x - 1]);
      else out += ' ';
    }
    out += '\n';
  }
  return out;
}

int perm_sign(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

QSpace::QSpace(Format f, std::size_t cap) : format_(std::move(f)), m_(m_sequence(format_)) {
  const std::size_t d = arity();
  size_ = count_C(format_);
  check_size(size_, cap, "the space C");
  radix_.assign(d + 1, 1);
  for (std::size_t k = 1; k <= d; ++k) {
    levels_.push_back(enumerate_subsets(m_[k], format_[k - 1] - 1));
    radix_[k] = radix_[k - 1] * levels_.back().size();
  }

  coords_.resize(size_ * d);
  paths_.resize(size_ * (d + 1));
  init_.resize(size_ * d);
  ls_.resize(size_ * (d + 1));
  std::vector<std::vector<std::vector<int>>> isos(d);
  for (std::size_t k = 1; k <= d; ++k)
    for (const auto& s : levels_[k - 1]) isos[k - 1].push_back(order_iso(s, m_[k - 1], m_[k]));

  for (std::size_t q = 0; q < size_; ++q) {
    int p = 1;
    paths_[q * (d + 1)] = 1;
    for (std::size_t k = 1; k <= d; ++k) {
      const auto c = static_cast<std::uint32_t>((q / radix_[k - 1]) % levels_[k - 1].size());
      coords_[q * d + k - 1] = c;
      const int next = isos[k - 1][c][p - 1];
      init_[q * d + k - 1] = block_of(levels_[k - 1][c], next);
      p = next;
      paths_[q * (d + 1) + k] = p;
    }
  }

  // Canonical order equals index order, so positions inside each class are
  // running counters keyed by (tail, p_k).
  for (std::size_t k = 0; k <= d; ++k) {
    std::map<std::pair<std::size_t, int>, int> counter;
    for (std::size_t q = 0; q < size_; ++q) ls_[q * (d + 1) + k] = ++counter[{tail_index(q, k), path(q, k)}];
  }

  comp_of_.resize(size_ * d);
  for (std::size_t k = 1; k <= d; ++k) {
    std::map<std::pair<std::size_t, int>, std::size_t> ids;
    for (std::size_t q = 0; q < size_; ++q) ids.emplace(std::make_pair(tail_index(q, k), l(q, k - 1)), 0);
    for (auto& [key, id] : ids) {
      id = components_.size();
      components_.push_back({k, key.first, key.second});
    }
    for (std::size_t q = 0; q < size_; ++q) comp_of_[q * d + k - 1] = ids.at({tail_index(q, k), l(q, k - 1)});
  }
}

std::size_t QSpace::index_of(const std::vector<std::uint32_t>& coords) const {
  std::size_t q = 0;
  for (std::size_t k = 1; k <= arity(); ++k) q += coords[k - 1] * radix_[k - 1];
  return q;
}

std::size_t QSpace::index_of(const QSeq& seq) const {
  if (seq.q.size() != arity()) throw Error(ErrorKind::WrongShape, "Q-sequence length differs from d");
  std::vector<std::uint32_t> coords;
  for (std::size_t k = 1; k <= arity(); ++k) {
    const auto& lv = levels_[k - 1];
    auto it = std::lower_bound(lv.begin(), lv.end(), seq.q[k - 1], colex_less);
    if (it == lv.end() || *it != seq.q[k - 1]) throw Error(ErrorKind::RangeViolation, "Q_k is not an element of C_k");
    coords.push_back(static_cast<std::uint32_t>(it - lv.begin()));
  }
  return index_of(coords);
}

QSeq QSpace::seq(std::size_t q) const {
  QSeq s;
  for (std::size_t k = 1; k <= arity(); ++k) s.q.push_back(levels_[k - 1][coord(q, k)]);
  return s;
}

double QSpace::sigma_order() const {
  double order = 1;
  for (const auto& c : components_) {
    const std::size_t n = levels_[c.level - 1].size();
    for (std::size_t i = 2; i <= n; ++i) order *= static_cast<double>(i);
  }
  return order;
}

Sigma QSpace::identity_sigma() const {
  Sigma s;
  for (const auto& c : components_) {
    Perm p(levels_[c.level - 1].size());
    std::iota(p.begin(), p.end(), 0u);
    s.push_back(std::move(p));
  }
  return s;
}

Sigma QSpace::random_sigma(SeededRng& rng) const {
  Sigma s = identity_sigma();
  for (auto& p : s)
    for (std::size_t i = p.size(); i > 1; --i)
      std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
  return s;
}

int QSpace::sign(const Sigma& s) const {
  int sg = 1;
  for (const auto& p : s) sg *= perm_sign(p);
  return sg;
}

std::size_t QSpace::apply_component(const Sigma& s, std::size_t q) const {
  std::size_t out = 0;
  for (std::size_t k = 1; k <= arity(); ++k) out += s[component_of(q, k)][coord(q, k)] * radix_[k - 1];
  return out;
}

std::size_t QSpace::apply_sigma(const Sigma& s, std::size_t q) const {
  std::size_t cur = q;
  for (std::size_t k = 1; k <= arity(); ++k) {
    const std::uint32_t c = coord(cur, k);
    const std::uint32_t moved = s[component_of(cur, k)][c];
    cur = cur - c * radix_[k - 1] + moved * radix_[k - 1];
  }
  return cur;
}

Monomial diagonal_monomial(const Format& f, DiagonalVariant variant, std::size_t cap) {
  QSpace space(f, cap);
  std::vector<Monomial::Factor> factors;
  factors.reserve(space.size());
  std::vector<int> idx(f.arity() + (variant == DiagonalVariant::Boundary ? 1 : 0));
  for (std::size_t q = 0; q < space.size(); ++q) {
    for (std::size_t k = 1; k <= f.arity(); ++k) idx[k - 1] = space.initial_index(q, k);
    if (variant == DiagonalVariant::Boundary) idx.back() = space.path(q, f.arity());
    factors.emplace_back(EntryVar(idx), 1u);
  }
  return Monomial::from_factors(std::move(factors));
}

}  // namespace hyperdet
