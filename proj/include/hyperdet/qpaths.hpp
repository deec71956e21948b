#ifndef HYPERDET_QPATHS_HPP
#define HYPERDET_QPATHS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hyperdet/format.hpp"
#include "hyperdet/monomial.hpp"
#include "hyperdet/rng.hpp"

namespace hyperdet {

/// Sorted subset of P_k = {1, ..., m_k}.
using Subset = std::vector<int>;

/// Q = (Q_1, ..., Q_d); q[k-1] holds Q_k.
struct QSeq {
  std::vector<Subset> q;
  friend bool operator==(const QSeq&, const QSeq&) = default;
};

/// p = (p_0, ..., p_d).
using QPath = std::vector<int>;

/// g[k-1][p-1] = g_k(p) for p in P_{k-1}; values in {1, ..., n_k}.
struct QDiagram {
  std::vector<std::vector<int>> g;
  friend bool operator==(const QDiagram&, const QDiagram&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Descending colex: the subset whose largest differing element is smaller comes first.
bool colex_less(const Subset& a, const Subset& b);

/// All `size`-subsets of {1..m} in descending colex order.
std::vector<Subset> enumerate_subsets(int m, int size);

/// |C| = prod_k binom(m_k, n_k - 1), saturating at SIZE_MAX.
std::size_t count_C(const Format& f);

/// All Q-sequences in canonical order: (Q_d, ..., Q_1) compared positionally.
/// Throws Error{SizeGuard} when |C| exceeds cap.
std::vector<QSeq> enumerate_C(const Format& f, std::size_t cap = kDefaultEnumerationCap);

/// The order isomorphism P_k -> P_{k+1} \ Q_{k+1}; result[p-1] = f(p).
/// Throws Error{SizeMismatch}.
std::vector<int> order_iso(const Subset& q_next, int size_prev, int size_next);

QPath q_path(const Format& f, const QSeq& q);

/// (R^1, ..., R^{n_k}): the runs of P_k \ Q_k cut by the elements of Q_k.
std::vector<std::vector<int>> blocks(const Subset& q, int m_k, int n_k);

/// g(p) = i iff phi(p) lies in block R^i. phi[p-1] = phi(p).
/// Throws Error{NotInjective} and Error{RangeViolation}.
std::vector<int> induced_map(const std::vector<int>& phi, const Subset& q, int m_k, int n_k);

/// All maps P_{k-1} -> {1..n_k} with |g^{-1}(i)| <= |R^i|, lexicographic order.
/// Throws Error{SizeGuard}.
std::vector<std::vector<int>> admissible_maps(const Subset& q, int m_prev, int m_k, int n_k,
                                              std::size_t cap = kDefaultEnumerationCap);

QDiagram initial_diagram(const Format& f, const QSeq& q);

/// i_k = g_k(p_{k-1}(Q')).
std::vector<int> path_over_diagram(const Format& f, const QSeq& q_path_source, const QDiagram& g);

/// Ordinal of p_d(Q) in P_d.
int j_of(const Format& f, const QSeq& q);

/// All Q' with Q'_j = Q_j for j > k and p_k(Q') = p_k, in canonical order.
/// `tail` is (Q_{k+1}, ..., Q_d).
std::vector<QSeq> conj_class(const Format& f, std::size_t k, const std::vector<Subset>& tail, int p_k);

/// (l_0, ..., l_d): l_k(Q) is the 1-based position of Q in its level-k class.
std::vector<int> l_sequence(const Format& f, const QSeq& q);

/// ASCII picture: rows P_d (top) down to P_0, 'x' marks Q_k, '*' the Q-path,
/// and each free element carries its block label under the initial diagram.
std::string render_qseq(const Format& f, const QSeq& q);

/// Permutation of {0..n-1}; perm[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

int perm_sign(const Perm& p);

/// An element of Sigma: one permutation of C_k per component.
using Sigma = std::vector<Perm>;

/// The space C of a format with everything the Sigma/Gamma machinery needs
/// precomputed. Sequences are referred to by their canonical position.
class QSpace {
 public:
  struct Component {
    std::size_t level;        // k, acting on Q_k
    std::size_t tail;         // canonical index of (Q_{k+1}, ..., Q_d)
    int l_prev;               // l_{k-1}
  };

  /// Throws Error{SizeGuard} when |C| exceeds cap.
  explicit QSpace(Format f, std::size_t cap = kDefaultEnumerationCap);

  const Format& format() const noexcept { return format_; }
  std::size_t arity() const noexcept { return format_.arity(); }
  const std::vector<int>& mseq() const noexcept { return m_; }
  std::size_t size() const noexcept { return size_; }

  /// C_k in canonical order, k in 1..d.
  const std::vector<Subset>& level(std::size_t k) const { return levels_[k - 1]; }
  /// Position of Q_k in C_k.
  std::uint32_t coord(std::size_t q, std::size_t k) const { return coords_[q * arity() + k - 1]; }
  std::size_t index_of(const std::vector<std::uint32_t>& coords) const;
  std::size_t index_of(const QSeq& q) const;
  QSeq seq(std::size_t q) const;

  /// Canonical index of (Q_{k+1}, ..., Q_d) among all such tails.
  std::size_t tail_index(std::size_t q, std::size_t k) const { return q / radix_[k]; }
  /// Number of possible tails (Q_{k+1}, ..., Q_d).
  std::size_t tail_count(std::size_t k) const { return size_ / radix_[k]; }

  int path(std::size_t q, std::size_t k) const { return paths_[q * (arity() + 1) + k]; }
  int l(std::size_t q, std::size_t k) const { return ls_[q * (arity() + 1) + k]; }
  /// Initial diagram value g_k(p_{k-1}(Q)) for the Q-path of Q.
  int initial_index(std::size_t q, std::size_t k) const { return init_[q * arity() + k - 1]; }

  const std::vector<Component>& components() const noexcept { return components_; }
  /// The component acting on level k of Q.
  std::size_t component_of(std::size_t q, std::size_t k) const { return comp_of_[q * arity() + k - 1]; }
  /// |Sigma| as a double (it overflows any integer type quickly).
  double sigma_order() const;

  Sigma identity_sigma() const;
  Sigma random_sigma(SeededRng& rng) const;
  int sign(const Sigma& s) const;
  /// The componentwise action sigma_Q Q: level k moved by the component of Q itself.
  std::size_t apply_component(const Sigma& s, std::size_t q) const;
  /// Sequential action, level 1 first: each level is moved by the component
  /// of the partially transformed sequence.
  std::size_t apply_sigma(const Sigma& s, std::size_t q) const;

 private:
  Format format_;
  std::vector<int> m_;
  std::size_t size_ = 0;
  std::vector<std::vector<Subset>> levels_;
  std::vector<std::size_t> radix_;  // radix_[k] = prod_{j<=k} |C_j|
  std::vector<std::uint32_t> coords_;
  std::vector<int> paths_;
  std::vector<int> ls_;
  std::vector<int> init_;
  std::vector<Component> components_;
  std::vector<std::size_t> comp_of_;
};

enum class DiagonalVariant { Closed, Boundary };

/// prod_{Q in C} a_{I(Q)} over initial diagrams; the boundary variant appends
/// j(Q) as a last index. Throws Error{SizeGuard}.
Monomial diagonal_monomial(const Format& f, DiagonalVariant variant, std::size_t cap = kDefaultEnumerationCap);

}  // namespace hyperdet

#endif  // HYPERDET_QPATHS_HPP
