#include "hyperdet/monomial.hpp"

#include <algorithm>

#include "hyperdet/error.hpp"

namespace hyperdet {

EntryVar::EntryVar(std::span<const int> index) {
  if (index.size() > kMaxArity) {
    throw Error(ErrorKind::IndexOutOfRange, "entry variable arity exceeds 8");
  }
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] < 1 || index[k] > kMaxIndex) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "entry index " + std::to_string(index[k]) + " outside [1, 255]");
    }
    key_ |= static_cast<std::uint64_t>(index[k]) << (8 * (kMaxArity - 1 - k));
  }
}

EntryVar::EntryVar(std::initializer_list<int> index)
    : EntryVar(std::span<const int>(index.begin(), index.size())) {}

std::size_t EntryVar::arity() const noexcept {
  std::size_t n = 0;
  while (n < kMaxArity && (*this)[n] != 0) ++n;
  return n;
}

std::vector<int> EntryVar::index() const {
  std::vector<int> out(arity());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (*this)[k];
  return out;
}

std::string EntryVar::to_string() const {
  std::string s = "a[";
  const auto n = arity();
  for (std::size_t k = 0; k < n; ++k) {
    if (k) s += ',';
    s += std::to_string((*this)[k]);
  }
  s += ']';
  return s;
}

Monomial Monomial::variable(EntryVar v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
  }
  return m;
}

std::uint32_t Monomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(EntryVar v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, EntryVar x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != other.factors_.end() && it->first < v) ++it;
    if (it == other.factors_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  out.factors_.reserve(factors_.size());
  auto it = divisor.factors_.begin();
  for (const auto& [v, e] : factors_) {
    std::uint32_t sub = 0;
    if (it != divisor.factors_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->first < j->first) {
      out.factors_.push_back(*i++);
    } else if (j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.factors_.insert(out.factors_.end(), i, a.factors_.end());
  out.factors_.insert(out.factors_.end(), j, b.factors_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  for (;; ++i, ++j) {
    const bool a_end = i == a.factors_.end();
    const bool b_end = j == b.factors_.end();
    if (a_end && b_end) return std::strong_ordering::equal;
    if (a_end) return std::strong_ordering::less;
    if (b_end) return std::strong_ordering::greater;
    // The side holding the smaller variable has the larger exponent there.
    if (i->first < j->first) return std::strong_ordering::greater;
    if (j->first < i->first) return std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
  }
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.to_string();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace hyperdet
