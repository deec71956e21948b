#include <map>

#include "hyperdet/determinants.hpp"
#include "hyperdet/error.hpp"

namespace hyperdet {

std::string to_string(DetMethod m) {
  switch (m) {
    case DetMethod::Entry: return "entry";
    case DetMethod::Square: return "square";
    case DetMethod::Pencil: return "pencil";
    case DetMethod::Boundary: return "boundary";
    case DetMethod::Product: return "product";
  }
  return "unknown";
}

bool DetResult::is_zero() const {
  if (polynomial) return polynomial->is_zero();
  return value && sgn(*value) == 0;
}

std::string DetResult::to_string() const {
  if (polynomial) return polynomial->to_string();
  if (value) return hyperdet::to_string(*value);
  return "";
}

std::optional<std::vector<int>> multidegree(const Polynomial& p, const Format& f) {
  std::vector<int> out(f.arity(), -1);
  for (const auto& t : p.terms()) {
    std::vector<std::vector<int>> deg(f.arity());
    for (std::size_t k = 0; k < f.arity(); ++k) deg[k].assign(static_cast<std::size_t>(f[k]), 0);
    for (const auto& [v, e] : t.monomial.factors()) {
      if (v.arity() != f.arity()) return std::nullopt;
      for (std::size_t k = 0; k < f.arity(); ++k) {
        if (v[k] < 1 || v[k] > f[k]) return std::nullopt;
        deg[k][static_cast<std::size_t>(v[k] - 1)] += static_cast<int>(e);
      }
    }
    for (std::size_t k = 0; k < f.arity(); ++k)
      for (int d : deg[k]) {
        if (out[k] == -1) out[k] = d;
        if (d != out[k]) return std::nullopt;
      }
  }
  for (auto& d : out)
    if (d == -1) d = 0;
  return out;
}

}  // namespace hyperdet
