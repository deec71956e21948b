#ifndef HYPERDET_POLICY_HPP
#define HYPERDET_POLICY_HPP

#include <string>
#include <string_view>
#include <vector>

namespace hyperdet {

/// One reading of how the boundary-format sum picks its diagram maps g_k.
///
///  gamma_key:    whose tail (Q or sigma Q) keys the chosen map.
///  admissible:   whose k-th subset (Q or sigma Q) the chosen g_k must be admissible for.
///  level_offset: Literal keys g_k by (tail Q^(k), l_k); Shifted keys g_k by
///                (tail Q^(k-1), l_{k-1}), i.e. the component G(Q^(k-1), l_{k-1}) holds g_k.
struct SumPolicy {
  enum class GammaKey { TailOfQ, TailOfSigmaQ };
  enum class Source { Q, SigmaQ };
  enum class LevelOffset { Literal, Shifted };

  GammaKey gamma_key = GammaKey::TailOfSigmaQ;
  Source admissible = Source::SigmaQ;
  LevelOffset level_offset = LevelOffset::Shifted;

  friend bool operator==(const SumPolicy&, const SumPolicy&) = default;
};

/// The calibrated policy shipped as default.
inline SumPolicy default_policy() { return {}; }

/// All eight combinations, in a fixed order.
std::vector<SumPolicy> all_policies();

/// "tailSigmaQ/sigmaQ/shifted" and so on.
std::string to_string(const SumPolicy& p);
/// Accepts the to_string form or "default". Throws Error{Parse}.
SumPolicy parse_policy(std::string_view text);

}  // namespace hyperdet

#endif  // HYPERDET_POLICY_HPP
