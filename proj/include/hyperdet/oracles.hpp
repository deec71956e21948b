#ifndef HYPERDET_ORACLES_HPP
#define HYPERDET_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperdet/determinants.hpp"
#include "hyperdet/linalg.hpp"
#include "hyperdet/mdmatrix.hpp"
#include "hyperdet/qpaths.hpp"
#include "hyperdet/univariate.hpp"

namespace hyperdet {

/// The linear system in the entries of a stating that x is a critical point of
/// the multilinear form: one row per (k, i_k), one column per entry.
RationalMatrix critical_system(const Format& f, const DegeneracyWitness& x);

/// A random integer matrix in the kernel of the critical system at a random
/// witness with coordinates in [1, 20]. Throws Error{WrongFormat} when the
/// format admits no determinant, Error{DegenerateSample} when repeated draws
/// give the zero matrix.
std::pair<MDMatrix, DegeneracyWitness> make_degenerate(const Format& f, std::uint64_t seed);

/// p at the entries of the numeric matrix a.
Rational evaluate_at(const Polynomial& p, const MDMatrix& a);

/// Exact re-evaluation of the critical system; also requires nonzero coordinates.
bool witness_check(const MDMatrix& a, const DegeneracyWitness& x);

/// a'_{..i..} = sum_j g_ij a_{..j..} in direction axis.
/// Throws Error{WrongShape}, Error{Singular}.
MDMatrix gl_action(const MDMatrix& a, std::size_t axis, const RationalMatrix& g);

/// A random integer matrix of determinant 1 (product of elementary matrices).
RationalMatrix random_unimodular(std::size_t n, SeededRng& rng, int steps = 6);

struct CorankReport {
  std::size_t rank = 0;
  bool corank_one = false;
};

/// Rank of the quadratic form det(z_1 A_1 + ... + z_n A_n), A_i the 2 x 2 slices
/// in the last direction. Throws Error{WrongFormat}.
CorankReport corank_22n(const MDMatrix& a);

/// All n x n minors of sum z_i A_i (n <= m), columns in descending colex order.
/// Throws Error{WrongShape}.
std::vector<Rational> maximal_minors_pencil(const std::vector<RationalMatrix>& slices, const std::vector<Rational>& z);

struct RankDropWitness {
  /// Set when a rational point exists: z = (z1, z2).
  std::optional<std::pair<Rational, Rational>> point;
  /// Otherwise z = (t, 1) for a root t of this polynomial.
  UniPoly<Rational> defining_polynomial;
  /// An interval (lo, hi] isolating a real root, when there is one.
  std::optional<std::pair<Rational, Rational>> real_interval;
};

struct RankDropReport {
  bool exists = false;
  std::optional<RankDropWitness> witness;
};

/// Decides whether rank(z1 B1 + z2 B2) < n for some z != 0 over the complex
/// numbers. Throws Error{WrongShape} unless B1, B2 are n x m with n < m.
RankDropReport pencil_rank_drop_oracle(const RationalMatrix& b1, const RationalMatrix& b2);

/// The slices in direction `axis` as matrices over the remaining two directions.
std::vector<RationalMatrix> slices_as_matrices(const MDMatrix& a, std::size_t axis);

struct PluckerVector {
  std::vector<std::pair<Subset, DetResult>> coordinates;
  bool all_vanish = true;
};

/// Boundary minors of a grassman-format matrix n_1 x ... x n_r x m (last
/// direction distinguished), over all m_r-subsets J in descending colex order.
/// Throws Error{WrongFormat}.
PluckerVector hyperplucker(const MDMatrix& a, const DetOptions& options = {});

/// Square-free gcd-style helpers on rational univariate polynomials.
UniPoly<Rational> uni_gcd(UniPoly<Rational> a, UniPoly<Rational> b);

/// Number of distinct real roots in (lo, hi] via a Sturm sequence.
int sturm_count(const UniPoly<Rational>& p, const Rational& lo, const Rational& hi);

}  // namespace hyperdet

#endif  // HYPERDET_ORACLES_HPP
