#ifndef HYPERDET_FORMAT_HPP
#define HYPERDET_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hyperdet {

/// Dimension vector (n1, ..., nd) of a d-dimensional matrix.
class Format {
 public:
  Format() = default;
  /// Throws Error{WrongFormat} if some n_k < 1 or n_k > 255.
  explicit Format(std::vector<int> dims);
  Format(std::initializer_list<int> dims) : Format(std::vector<int>(dims)) {}

  const std::vector<int>& dims() const noexcept { return dims_; }
  std::size_t arity() const noexcept { return dims_.size(); }
  int operator[](std::size_t k) const { return dims_[k]; }
  std::size_t volume() const noexcept;

  /// The format with all size-1 directions removed; `kept` receives the
  /// original positions of the surviving directions.
  Format reduced(std::vector<std::size_t>* kept = nullptr) const;

  std::string to_string() const;  // "2x2x3"

  friend bool operator==(const Format&, const Format&) = default;

 private:
  std::vector<int> dims_;
};

/// (m0, ..., md) with m0 = 1 and m_k = m_{k-1} + n_k - 1.
std::vector<int> m_sequence(const Format& f);

enum class FormatKind { Square2D, Inner, Boundary, Grassman };

std::string to_string(FormatKind kind);

struct FormatClass {
  FormatKind kind = FormatKind::Inner;
  /// For Boundary and Grassman: the direction (0-based, in the unreduced
  /// format) that meets or exceeds 1 + sum over the others of (n_k - 1).
  std::optional<std::size_t> distinguished;

  friend bool operator==(const FormatClass&, const FormatClass&) = default;
};

/// Size-1 directions are dropped first. An all-ones format is a 1x1 square.
FormatClass classify_format(const Format& f);

/// For a boundary format (or a square n x n, read as the boundary format of
/// (n)): the reduced format without its distinguished direction, together with
/// the position of that direction in the reduced format. Throws Error{WrongFormat}.
Format boundary_base(const Format& f, std::size_t* distinguished = nullptr);

/// True when the reduced format admits a determinant (Square2D, Inner or Boundary).
bool admits_determinant(const Format& f);

}  // namespace hyperdet

#endif  // HYPERDET_FORMAT_HPP
