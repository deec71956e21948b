#include <string>

#include "hyperdet/determinants.hpp"
#include "hyperdet/error.hpp"
#include "hyperdet/oracles.hpp"

namespace hyperdet {

namespace {

void check_leibniz(const DetOptions& options, std::vector<std::string>& failures) {
  for (int n = 2; n <= 4; ++n) {
    const MDMatrix a = MDMatrix::symbolic(Format({n, n}));
    const Polynomial expected = *det_2d(a, options).polynomial;
    const Polynomial got = *det_boundary(a, options).polynomial;
    if (got != expected) failures.push_back("d=1 n=" + std::to_string(n) + " differs from the Leibniz determinant");
  }
}

void check_223(const DetOptions& options, std::vector<std::string>& failures) {
  const Format f({2, 2, 3});
  const Polynomial p = *det_boundary(MDMatrix::symbolic(f), options).polynomial;
  if (p.is_zero()) {
    failures.push_back("2x2x3 determinant is identically zero");
    return;
  }
  if (p.degree() != 6) failures.push_back("2x2x3 degree is " + std::to_string(p.degree()) + ", expected 6");
  if (!multidegree(p, f)) failures.push_back("2x2x3 partial degrees are not uniform");

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto [a, x] = make_degenerate(f, seed);
    if (!is_zero(evaluate_at(p, a))) {
      failures.push_back("2x2x3 does not vanish on degenerate sample seed " + std::to_string(seed));
      break;
    }
  }
  int nonzero = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    if (!is_zero(evaluate_at(p, MDMatrix::random_integer(f, seed, 10)))) ++nonzero;
  if (nonzero == 0) failures.push_back("2x2x3 vanishes on generic samples");
}

}  // namespace

std::vector<CalibrationReport> calibrate(const DetOptions& options) {
  std::vector<CalibrationReport> reports;
  bool any = false;
  for (const auto& policy : all_policies()) {
    DetOptions opts = options;
    opts.policy = policy;
    CalibrationReport r;
    r.policy = policy;
    try {
      check_leibniz(opts, r.failures);
      check_223(opts, r.failures);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SizeGuard) throw;
      r.failures.push_back(e.what());
    }
    r.passed = r.failures.empty();
    any = any || r.passed;
    reports.push_back(std::move(r));
  }
  if (!any) throw Error(ErrorKind::CalibrationFailure, "no sum policy satisfies the calibration contract");
  return reports;
}

}  // namespace hyperdet
