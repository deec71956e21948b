#include "hyperdet/policy.hpp"

#include "hyperdet/error.hpp"

namespace hyperdet {

std::vector<SumPolicy> all_policies() {
  using P = SumPolicy;
  std::vector<P> out;
  for (auto g : {P::GammaKey::TailOfQ, P::GammaKey::TailOfSigmaQ})
    for (auto a : {P::Source::Q, P::Source::SigmaQ})
      for (auto l : {P::LevelOffset::Literal, P::LevelOffset::Shifted}) out.push_back({g, a, l});
  return out;
}

std::string to_string(const SumPolicy& p) {
  using P = SumPolicy;
  std::string s = p.gamma_key == P::GammaKey::TailOfQ ? "tailQ" : "tailSigmaQ";
  s += p.admissible == P::Source::Q ? "/Q" : "/sigmaQ";
  s += p.level_offset == P::LevelOffset::Literal ? "/literal" : "/shifted";
  return s;
}

SumPolicy parse_policy(std::string_view text) {
  if (text == "default") return default_policy();
  for (const auto& p : all_policies())
    if (to_string(p) == text) return p;
  throw Error(ErrorKind::Parse, "unknown policy '" + std::string(text) + "'");
}

}  // namespace hyperdet
