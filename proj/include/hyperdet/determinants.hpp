#ifndef HYPERDET_DETERMINANTS_HPP
#define HYPERDET_DETERMINANTS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperdet/mdmatrix.hpp"
#include "hyperdet/policy.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/rational.hpp"

namespace hyperdet {

inline constexpr std::size_t kDefaultMaxTerms = 10'000'000;

struct DetOptions {
  SumPolicy policy = default_policy();
  /// Cap on generated terms (and on |Sigma|); exceeding it raises Error{SizeGuard}.
  std::size_t max_terms = kDefaultMaxTerms;
  unsigned threads = 1;
};

enum class DetMethod { Entry, Square, Pencil, Boundary, Product };

std::string to_string(DetMethod m);

/// How the raw sum was turned into the reported value: raw = sign * content * reported.
struct Normalization {
  int sign = 1;
  Integer content = 1;
  /// The monomial whose coefficient was made +1, or empty when none was used.
  std::string anchor;
};

struct DetResult {
  Format format;  // of the input matrix
  DetMethod method = DetMethod::Square;
  std::optional<Polynomial> polynomial;
  std::optional<Rational> value;
  Normalization normalization;

  bool is_symbolic() const noexcept { return polynomial.has_value(); }
  bool is_zero() const;
  /// Polynomial text form or "p/q".
  std::string to_string() const;
};

/// Leibniz (symbolic) or Bareiss (numeric). The format must reduce to n x n.
/// Throws Error{NotSquare}, Error{SizeGuard}.
DetResult det_2d(const MDMatrix& a, const DetOptions& options = {});

/// Discriminant of det(A + zB) for a format that permutes to n x n x 2; the
/// size-2 direction used for the pencil is the last one of size 2.
/// Throws Error{WrongFormat}.
DetResult det_pencil_nn2(const MDMatrix& a, const DetOptions& options = {});

/// The signed sum over Sigma and Gamma for a boundary format (or a square
/// n x n, read as boundary of (n)). Throws Error{WrongFormat}, Error{SizeGuard},
/// Error{CalibrationFailure} when a numeric value cannot be normalized.
DetResult det_boundary(const MDMatrix& a, const DetOptions& options = {});

/// Routes by format class. Throws Error{GrassmanFormat}, Error{Unsupported}.
DetResult det_dispatch(const MDMatrix& a, const DetOptions& options = {});

/// Number of generated terms of the boundary sum without evaluating them.
std::size_t boundary_term_count(const Format& f, const DetOptions& options = {});

/// |C| for the boundary base of f. Throws Error{WrongFormat}.
std::size_t degree_boundary(const Format& f);

struct ClosedDetResult {
  std::vector<MinorSubformat> minors;
  std::vector<DetResult> factors;  // one per minor, same order
  DetResult product;
};

/// Product of the determinants of all minors, the full matrix included.
/// Throws Error{Unsupported} if some minor has no available method.
ClosedDetResult closed_det(const MDMatrix& a, const DetOptions& options = {});

struct QuotientReport {
  bool applicable = false;
  bool passed = false;
  std::vector<int> factor_degrees;  // of the proper minors
  std::optional<Polynomial> quotient;
  std::optional<Polynomial> determinant;
};

/// Divides the symbolic closed determinant by the product of the proper minors
/// and compares with the determinant. Throws Error{NotDivisible}.
QuotientReport quotient_identity_check(const Format& f, const DetOptions& options = {});

struct CalibrationReport {
  SumPolicy policy;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Runs the calibration contract for every policy. Throws
/// Error{CalibrationFailure} if none passes.
std::vector<CalibrationReport> calibrate(const DetOptions& options = {});

/// For each direction k and index value i in 1..n_k, the degree of every
/// monomial in the variables with i_k = i. Returns the common value per
/// direction when it does not depend on the monomial nor on i, else nothing.
std::optional<std::vector<int>> multidegree(const Polynomial& p, const Format& f);

}  // namespace hyperdet

#endif  // HYPERDET_DETERMINANTS_HPP
