#include "hyperdet/format.hpp"

#include <algorithm>

#include "hyperdet/error.hpp"

namespace hyperdet {

Format::Format(std::vector<int> dims) : dims_(std::move(dims)) {
  for (int n : dims_) {
    if (n < 1 || n > 255) throw Error(ErrorKind::WrongFormat, "dimension " + std::to_string(n) + " outside [1, 255]");
  }
}

std::size_t Format::volume() const noexcept {
  std::size_t v = 1;
  for (int n : dims_) v *= static_cast<std::size_t>(n);
  return v;
}

Format Format::reduced(std::vector<std::size_t>* kept) const {
  std::vector<int> r;
  if (kept) kept->clear();
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (dims_[k] == 1) continue;
    r.push_back(dims_[k]);
    if (kept) kept->push_back(k);
  }
  return Format(std::move(r));
}

std::string Format::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) s += 'x';
    s += std::to_string(dims_[k]);
  }
  return s;
}

std::vector<int> m_sequence(const Format& f) {
  std::vector<int> m{1};
  for (int n : f.dims()) m.push_back(m.back() + n - 1);
  return m;
}

std::string to_string(FormatKind kind) {
  switch (kind) {
    case FormatKind::Square2D: return "square";
    case FormatKind::Inner: return "inner";
    case FormatKind::Boundary: return "boundary";
    case FormatKind::Grassman: return "grassman";
  }
  return "unknown";
}

FormatClass classify_format(const Format& f) {
  std::vector<std::size_t> kept;
  const Format r = f.reduced(&kept);
  if (r.arity() == 0) return {FormatKind::Square2D, std::nullopt};
  if (r.arity() == 1) return {FormatKind::Grassman, kept[0]};
  if (r.arity() == 2) {
    if (r[0] == r[1]) return {FormatKind::Square2D, std::nullopt};
    return {FormatKind::Grassman, r[0] > r[1] ? kept[0] : kept[1]};
  }
  // n_j <=> 1 + sum_{k != j}(n_k - 1)  is  2(n_j - 1) <=> S.
  int s = 0;
  for (int n : r.dims()) s += n - 1;
  std::optional<std::size_t> boundary;
  for (std::size_t j = 0; j < r.arity(); ++j) {
    const int lhs = 2 * (r[j] - 1);
    if (lhs > s) return {FormatKind::Grassman, kept[j]};
    if (lhs == s) boundary = kept[j];
  }
  if (boundary) return {FormatKind::Boundary, boundary};
  return {FormatKind::Inner, std::nullopt};
}

Format boundary_base(const Format& f, std::size_t* distinguished) {
  std::vector<std::size_t> kept;
  const Format r = f.reduced(&kept);
  const FormatClass c = classify_format(f);
  std::size_t pos = 0;
  if (c.kind == FormatKind::Boundary) {
    pos = static_cast<std::size_t>(std::find(kept.begin(), kept.end(), *c.distinguished) - kept.begin());
  } else if (c.kind == FormatKind::Square2D && r.arity() == 2) {
    pos = 1;
  } else {
    throw Error(ErrorKind::WrongFormat, f.to_string() + " is not a boundary format");
  }
  std::vector<int> dims = r.dims();
  dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(pos));
  if (distinguished) *distinguished = pos;
  return Format(std::move(dims));
}

bool admits_determinant(const Format& f) { return classify_format(f).kind != FormatKind::Grassman; }

}  // namespace hyperdet
