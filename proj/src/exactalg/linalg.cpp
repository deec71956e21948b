#include "hyperdet/linalg.hpp"

#include <numeric>

namespace hyperdet {

namespace {

struct Echelon {
  std::vector<Integer> rows;  // row-major, fraction-free echelon form
  std::size_t ncols = 0;
  std::vector<std::size_t> pivot_cols;
};

// Clears denominators row by row, then runs fraction-free elimination that
// skips columns without a pivot. Every intermediate entry is a minor of the
// scaled input, so each division is exact.
Echelon fraction_free_echelon(const RationalMatrix& m) {
  Echelon e;
  e.ncols = m.cols();
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  e.rows.resize(nr * nc);
  for (std::size_t i = 0; i < nr; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) {
      e.rows[i * nc + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  auto at = [&e, nc](std::size_t i, std::size_t j) -> Integer& { return e.rows[i * nc + j]; };
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && at(p, c) == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(at(p, j), at(r, j));
    }
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer v = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        at(i, j) = exact_quotient(v, prev);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

void reduce_rows(std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return;
  const std::size_t nc = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < nc; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw Error(ErrorKind::WrongShape, "entry count != rows * cols");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::WrongShape, "matrix product shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  return bareiss_determinant(m.entries(), m.rows());
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace_exact(const RationalMatrix& m) {
  const Echelon e = fraction_free_echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(nc);
    x[f] = 1;
    for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = e.pivot_cols[r];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < nc; ++j) {
        if (!is_zero(x[j])) s += Rational(e.rows[r * nc + j]) * x[j];
      }
      x[pc] = -s / Rational(e.rows[r * nc + pc]);
    }
    basis.push_back(std::move(x));
  }
  reduce_rows(basis);
  return basis;
}

std::size_t symmetric_rank(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "symmetric_rank on a non-symmetric matrix");
  return rank(m);
}

}  // namespace hyperdet
