#ifndef HYPERDET_DETERMINANTS_INTERNAL_HPP
#define HYPERDET_DETERMINANTS_INTERNAL_HPP

#include <vector>

#include "hyperdet/determinants.hpp"
#include "hyperdet/qpaths.hpp"
#include "hyperdet/univariate.hpp"

namespace hyperdet::detail {

/// raw is written in the variables a[I] of `local`'s own index space; replaces
/// each by the corresponding entry of `local`.
Polynomial relabel(const Polynomial& raw, const MDMatrix& local);

/// Divides out the content and fixes the sign so that `anchor` (or, if it is
/// absent, the least monomial) gets a positive coefficient.
void normalize(Polynomial& p, const Monomial& anchor, Normalization& record);

/// Integer entries equal to `values` times the lcm of their denominators.
std::vector<Integer> clear_denominators(const std::vector<Rational>& values, Integer& scale);

/// Coefficients (low to high) of the degree <= n polynomial through (t, values[t]), t = 0..n.
UniPoly<Rational> interpolate(const std::vector<Rational>& values);

struct PermTable {
  std::vector<Perm> perms;  // lexicographic
  std::vector<int> signs;
};

/// All permutations of n elements; throws Error{SizeGuard} for n > 9.
const PermTable& perm_table(std::size_t n);

/// Moves `distinguished` of the reduced matrix to the last position.
MDMatrix move_axis_last(const MDMatrix& reduced, std::size_t distinguished);

}  // namespace hyperdet::detail

#endif  // HYPERDET_DETERMINANTS_INTERNAL_HPP
