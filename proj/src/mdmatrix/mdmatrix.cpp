#include "hyperdet/mdmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "hyperdet/error.hpp"
#include "hyperdet/rng.hpp"

namespace hyperdet {

void MDMatrix::init_strides() {
  const std::size_t d = format_.arity();
  strides_.assign(d, 1);
  for (std::size_t k = d; k-- > 1;) strides_[k - 1] = strides_[k] * static_cast<std::size_t>(format_[k]);
}

MDMatrix MDMatrix::numeric(Format f, std::vector<Rational> entries) {
  if (entries.size() != f.volume()) throw Error(ErrorKind::WrongShape, "entry count does not match format " + f.to_string());
  MDMatrix a;
  a.format_ = std::move(f);
  a.entries_ = std::move(entries);
  a.init_strides();
  return a;
}

MDMatrix MDMatrix::polynomial(Format f, std::vector<Polynomial> entries) {
  if (entries.size() != f.volume()) throw Error(ErrorKind::WrongShape, "entry count does not match format " + f.to_string());
  MDMatrix a;
  a.format_ = std::move(f);
  a.entries_ = std::move(entries);
  a.init_strides();
  return a;
}

MDMatrix MDMatrix::symbolic(const Format& f) {
  MDMatrix a;
  a.format_ = f;
  a.init_strides();
  std::vector<Polynomial> entries;
  entries.reserve(f.volume());
  for (std::size_t off = 0; off < f.volume(); ++off) entries.push_back(Polynomial::variable(EntryVar(a.index_of(off))));
  a.entries_ = std::move(entries);
  return a;
}

MDMatrix MDMatrix::random_integer(const Format& f, std::uint64_t seed, int bound) {
  if (bound < 1) throw Error(ErrorKind::RangeViolation, "bound must be at least 1");
  SeededRng rng(seed);
  std::vector<Rational> entries(f.volume());
  for (auto& e : entries) e = Rational(static_cast<long>(rng.uniform_int(-bound, bound)));
  return numeric(f, std::move(entries));
}

std::size_t MDMatrix::offset(std::span<const int> index) const {
  if (index.size() != arity()) throw Error(ErrorKind::IndexOutOfRange, "index arity mismatch");
  std::size_t off = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] < 1 || index[k] > format_[k]) throw Error(ErrorKind::IndexOutOfRange, "index out of range");
    off += static_cast<std::size_t>(index[k] - 1) * strides_[k];
  }
  return off;
}

std::vector<int> MDMatrix::index_of(std::size_t off) const {
  std::vector<int> idx(arity());
  for (std::size_t k = 0; k < arity(); ++k) {
    idx[k] = static_cast<int>(off / strides_[k]) + 1;
    off %= strides_[k];
  }
  return idx;
}

const std::vector<Rational>& MDMatrix::values() const {
  if (is_symbolic()) throw Error(ErrorKind::WrongFormat, "matrix is symbolic");
  return std::get<std::vector<Rational>>(entries_);
}

const std::vector<Polynomial>& MDMatrix::polys() const {
  if (!is_symbolic()) throw Error(ErrorKind::WrongFormat, "matrix is numeric");
  return std::get<std::vector<Polynomial>>(entries_);
}

Polynomial MDMatrix::entry_polynomial(std::size_t off) const {
  if (is_symbolic()) return polys()[off];
  const Rational& v = values()[off];
  if (!is_integral(v)) throw Error(ErrorKind::WrongFormat, "non-integral entry has no integer polynomial form");
  return Polynomial(Integer(v.get_num()));
}

MDMatrix MDMatrix::with_entries_from(Format f, const std::vector<std::size_t>& source) const {
  if (is_symbolic()) {
    std::vector<Polynomial> e;
    e.reserve(source.size());
    for (auto off : source) e.push_back(polys()[off]);
    return polynomial(std::move(f), std::move(e));
  }
  std::vector<Rational> e;
  e.reserve(source.size());
  for (auto off : source) e.push_back(values()[off]);
  return numeric(std::move(f), std::move(e));
}

MDMatrix MDMatrix::subtensor(const std::vector<std::vector<int>>& selections) const {
  if (selections.size() != arity()) throw Error(ErrorKind::IndexOutOfRange, "one selection per direction required");
  std::vector<int> dims;
  for (std::size_t k = 0; k < arity(); ++k) {
    const auto& s = selections[k];
    if (s.empty()) throw Error(ErrorKind::EmptySelection, "empty selection in direction " + std::to_string(k + 1));
    for (std::size_t t = 0; t < s.size(); ++t) {
      if (s[t] < 1 || s[t] > format_[k]) throw Error(ErrorKind::IndexOutOfRange, "selection index out of range");
      if (t && s[t] <= s[t - 1]) throw Error(ErrorKind::IndexOutOfRange, "selection must be strictly increasing");
    }
    dims.push_back(static_cast<int>(s.size()));
  }
  Format f(std::move(dims));
  std::vector<std::size_t> source;
  source.reserve(f.volume());
  std::vector<std::size_t> pos(arity(), 0);
  for (std::size_t n = 0; n < f.volume(); ++n) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < arity(); ++k) off += static_cast<std::size_t>(selections[k][pos[k]] - 1) * strides_[k];
    source.push_back(off);
    for (std::size_t k = arity(); k-- > 0;) {
      if (++pos[k] < selections[k].size()) break;
      pos[k] = 0;
    }
  }
  return with_entries_from(std::move(f), source);
}

MDMatrix MDMatrix::slice(std::size_t axis, int i) const {
  if (arity() < 2) throw Error(ErrorKind::WrongFormat, "cannot slice a 1-dimensional matrix");
  if (axis >= arity() || i < 1 || i > format_[axis]) throw Error(ErrorKind::IndexOutOfRange, "slice out of range");
  std::vector<std::vector<int>> sel(arity());
  for (std::size_t k = 0; k < arity(); ++k) {
    if (k == axis) {
      sel[k] = {i};
    } else {
      sel[k].resize(format_[k]);
      std::iota(sel[k].begin(), sel[k].end(), 1);
    }
  }
  MDMatrix sub = subtensor(sel);
  std::vector<int> dims = format_.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(axis));
  sub.format_ = Format(std::move(dims));
  sub.init_strides();
  return sub;
}

MDMatrix MDMatrix::permuted(const std::vector<std::size_t>& order) const {
  const std::size_t d = arity();
  std::vector<bool> seen(d, false);
  if (order.size() != d) throw Error(ErrorKind::WrongShape, "permutation length mismatch");
  for (auto o : order) {
    if (o >= d || seen[o]) throw Error(ErrorKind::WrongShape, "not a permutation");
    seen[o] = true;
  }
  std::vector<int> dims(d);
  for (std::size_t j = 0; j < d; ++j) dims[j] = format_[order[j]];
  Format f(dims);
  MDMatrix shape;
  shape.format_ = f;
  shape.init_strides();
  std::vector<std::size_t> source(f.volume());
  std::vector<int> old(d);
  for (std::size_t n = 0; n < f.volume(); ++n) {
    const auto idx = shape.index_of(n);
    for (std::size_t j = 0; j < d; ++j) old[order[j]] = idx[j];
    source[n] = offset(old);
  }
  return with_entries_from(std::move(f), source);
}

MDMatrix MDMatrix::reduced() const {
  MDMatrix r = *this;
  r.format_ = format_.reduced();
  r.init_strides();
  return r;
}

namespace {

void subsets_of(int n, std::vector<std::vector<int>>& out) {
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<MinorSubformat> enumerate_minor_subformats(const Format& f) {
  for (int n : f.dims())
    if (n > 20) throw Error(ErrorKind::SizeGuard, "too many subsets to enumerate minors");
  std::vector<std::vector<std::vector<int>>> choices(f.arity());
  for (std::size_t k = 0; k < f.arity(); ++k) subsets_of(f[k], choices[k]);
  std::vector<MinorSubformat> out;
  std::vector<std::size_t> pos(f.arity(), 0);
  for (bool done = false; !done;) {
    MinorSubformat m;
    std::vector<int> dims;
    for (std::size_t k = 0; k < f.arity(); ++k) {
      m.selections.push_back(choices[k][pos[k]]);
      dims.push_back(static_cast<int>(choices[k][pos[k]].size()));
    }
    m.format = Format(dims);
    if (admits_determinant(m.format)) out.push_back(std::move(m));
    done = true;
    for (std::size_t k = f.arity(); k-- > 0;) {
      if (++pos[k] < choices[k].size()) {
        done = false;
        break;
      }
      pos[k] = 0;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const MinorSubformat& a, const MinorSubformat& b) {
    const auto va = a.format.volume(), vb = b.format.volume();
    if (va != vb) return va < vb;
    return a.selections < b.selections;
  });
  return out;
}

}  // namespace hyperdet
