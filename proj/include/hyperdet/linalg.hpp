#ifndef HYPERDET_LINALG_HPP
#define HYPERDET_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperdet/error.hpp"
#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Fraction-free (Bareiss) determinant of a dense row-major n x n matrix over an
/// integral domain R providing is_zero(R) and exact_quotient(R, R).
template <class R>
R bareiss_determinant(std::vector<R> m, std::size_t n) {
  if (m.size() != n * n) throw Error(ErrorKind::WrongShape, "bareiss_determinant: not n x n");
  if (n == 0) return R(1);
  auto at = [&m, n](std::size_t i, std::size_t j) -> R& { return m[i * n + j]; };
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(at(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(at(r, k))) ++r;
      if (r == n) return R(0);
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = at(k, k) * at(i, j);
        v -= at(i, k) * at(k, j);
        at(i, j) = exact_quotient(v, prev);
      }
    }
    prev = at(k, k);
  }
  R det = at(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws Error{WrongShape} if the entry count is not rows * cols.
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const noexcept { return data_; }

  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Throws Error{NotSquare}.
Rational determinant(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// Basis of the right nullspace, as the rows of a matrix in reduced row echelon
/// form. Empty iff m is injective.
std::vector<std::vector<Rational>> nullspace_exact(const RationalMatrix& m);

/// Rank of a symmetric matrix; throws Error{NotSymmetric}.
std::size_t symmetric_rank(const RationalMatrix& m);

}  // namespace hyperdet

#endif  // HYPERDET_LINALG_HPP
