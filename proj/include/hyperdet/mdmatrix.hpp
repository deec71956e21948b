#ifndef HYPERDET_MDMATRIX_HPP
#define HYPERDET_MDMATRIX_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "hyperdet/format.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/rational.hpp"

namespace hyperdet {

/// Dense d-dimensional matrix, numeric (Rational entries) or symbolic
/// (Polynomial entries). Row-major: i1 slowest, id fastest. Index values are
/// 1-based; directions (axes) are 0-based.
class MDMatrix {
 public:
  MDMatrix() = default;

  /// Throws Error{WrongShape} if the entry count differs from the volume.
  static MDMatrix numeric(Format f, std::vector<Rational> entries);
  static MDMatrix polynomial(Format f, std::vector<Polynomial> entries);
  /// Entry at I is the variable a[I].
  static MDMatrix symbolic(const Format& f);
  /// I.i.d. uniform integers in [-bound, bound].
  static MDMatrix random_integer(const Format& f, std::uint64_t seed, int bound);

  const Format& format() const noexcept { return format_; }
  std::size_t arity() const noexcept { return format_.arity(); }
  std::size_t size() const noexcept { return format_.volume(); }
  bool is_symbolic() const noexcept { return std::holds_alternative<std::vector<Polynomial>>(entries_); }

  /// Throws Error{IndexOutOfRange}.
  std::size_t offset(std::span<const int> index) const;
  std::vector<int> index_of(std::size_t offset) const;

  /// Numeric access; throws Error{WrongFormat} on a symbolic matrix.
  const std::vector<Rational>& values() const;
  const Rational& value(std::span<const int> index) const { return values()[offset(index)]; }
  /// Symbolic access; throws Error{WrongFormat} on a numeric matrix.
  const std::vector<Polynomial>& polys() const;
  /// Works in both modes.
  Polynomial entry_polynomial(std::size_t offset) const;

  /// Fixes index i in direction axis. Throws Error{IndexOutOfRange}, and
  /// Error{WrongFormat} for a 1-dimensional matrix.
  MDMatrix slice(std::size_t axis, int i) const;
  /// Restriction to the grid of sorted per-direction selections.
  /// Throws Error{EmptySelection}, Error{IndexOutOfRange}.
  MDMatrix subtensor(const std::vector<std::vector<int>>& selections) const;
  /// Direction j of the result is direction order[j] of this matrix.
  MDMatrix permuted(const std::vector<std::size_t>& order) const;
  /// Same entries with every size-1 direction removed.
  MDMatrix reduced() const;

  friend bool operator==(const MDMatrix&, const MDMatrix&) = default;

 private:
  Format format_;
  std::vector<std::size_t> strides_;
  std::variant<std::vector<Rational>, std::vector<Polynomial>> entries_;

  void init_strides();
  MDMatrix with_entries_from(Format f, const std::vector<std::size_t>& source_offsets) const;
};

/// Vectors x(1), ..., x(d) with nonzero rational coordinates.
struct DegeneracyWitness {
  std::vector<std::vector<Rational>> vectors;
  friend bool operator==(const DegeneracyWitness&, const DegeneracyWitness&) = default;
};

struct MinorSubformat {
  std::vector<std::vector<int>> selections;
  Format format;  // unreduced, one entry per direction
};

/// Every per-direction selection whose reduced format admits a determinant,
/// ordered by the size of the reduced format, then lexicographically by selection.
std::vector<MinorSubformat> enumerate_minor_subformats(const Format& f);

}  // namespace hyperdet

#endif  // HYPERDET_MDMATRIX_HPP
