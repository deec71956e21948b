#ifndef HYPERDET_MONOMIAL_HPP
#define HYPERDET_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hyperdet {

/// The symbol a[i1,...,id] for one entry of a d-dimensional matrix.
///
/// Indices are 1-based and packed big-endian into one word, zero padded, so the
/// integer order of the packed key is exactly the lexicographic order of the
/// index tuples (a proper prefix sorts first).
class EntryVar {
 public:
  static constexpr std::size_t kMaxArity = 8;
  static constexpr int kMaxIndex = 255;

  constexpr EntryVar() = default;
  /// Throws Error{IndexOutOfRange} for an index outside [1, 255] or more than
  /// kMaxArity indices.
  explicit EntryVar(std::span<const int> index);
  EntryVar(std::initializer_list<int> index);

  std::size_t arity() const noexcept;
  int operator[](std::size_t k) const noexcept {
    return static_cast<int>((key_ >> (8 * (kMaxArity - 1 - k))) & 0xffu);
  }
  std::vector<int> index() const;
  std::uint64_t key() const noexcept { return key_; }

  /// Canonical rendering "a[i1,...,id]".
  std::string to_string() const;

  friend constexpr auto operator<=>(EntryVar, EntryVar) = default;

 private:
  std::uint64_t key_ = 0;
};

/// Product of entry variables with positive exponents, variables strictly
/// increasing. The empty product is the monomial 1.
class Monomial {
 public:
  using Factor = std::pair<EntryVar, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(EntryVar v, std::uint32_t exponent = 1);
  /// Sorts, merges repeated variables and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t degree() const noexcept;
  std::uint32_t exponent(EntryVar v) const noexcept;

  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; the caller guarantees divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Lexicographic order on exponent vectors, variables ordered by index.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace hyperdet

#endif  // HYPERDET_MONOMIAL_HPP
