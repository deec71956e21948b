#ifndef HYPERDET_RNG_HPP
#define HYPERDET_RNG_HPP

#include <cstdint>
#include <random>

namespace hyperdet {

/// Seeded generator whose integer draws are identical on every platform
/// (std::uniform_int_distribution is implementation-defined, so it is avoided).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi], lo <= hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperdet

#endif  // HYPERDET_RNG_HPP
