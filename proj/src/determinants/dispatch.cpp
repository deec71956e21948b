#include "hyperdet/error.hpp"
#include "internal.hpp"

namespace hyperdet {

namespace {

bool permutes_to_pencil(const Format& r) {
  if (r.arity() != 3) return false;
  for (std::size_t k = 0; k < 3; ++k)
    if (r[k] == 2 && r[(k + 1) % 3] == r[(k + 2) % 3]) return true;
  return false;
}

}  // namespace

DetResult det_dispatch(const MDMatrix& a, const DetOptions& options) {
  const FormatClass c = classify_format(a.format());
  switch (c.kind) {
    case FormatKind::Square2D:
      return det_2d(a, options);
    case FormatKind::Boundary:
      return det_boundary(a, options);
    case FormatKind::Inner:
      if (permutes_to_pencil(a.format().reduced())) return det_pencil_nn2(a, options);
      throw Error(ErrorKind::Unsupported, "no determinant method for inner format " + a.format().to_string());
    case FormatKind::Grassman:
      break;
  }
  throw Error(ErrorKind::GrassmanFormat,
              a.format().to_string() + " is a grassman format and has no determinant; use plucker");
}

ClosedDetResult closed_det(const MDMatrix& a, const DetOptions& options) {
  ClosedDetResult out;
  out.minors = enumerate_minor_subformats(a.format());
  for (const auto& m : out.minors) {
    try {
      out.factors.push_back(det_dispatch(a.subtensor(m.selections), options));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SizeGuard) throw;
      throw Error(ErrorKind::Unsupported, "minor " + m.format.to_string() + ": " + e.what());
    }
  }
  DetResult& p = out.product;
  p.format = a.format();
  p.method = DetMethod::Product;
  if (a.is_symbolic()) {
    Polynomial prod(1);
    for (const auto& f : out.factors) prod *= *f.polynomial;
    p.polynomial = std::move(prod);
  } else {
    Rational prod(1);
    for (const auto& f : out.factors) prod *= *f.value;
    p.value = prod;
  }
  return out;
}

QuotientReport quotient_identity_check(const Format& f, const DetOptions& options) {
  QuotientReport report;
  if (!admits_determinant(f)) return report;
  report.applicable = true;
  const MDMatrix a = MDMatrix::symbolic(f);
  const ClosedDetResult closed = closed_det(a, options);
  Polynomial proper(1);
  for (std::size_t i = 0; i < closed.minors.size(); ++i) {
    if (closed.minors[i].format == f) continue;
    proper *= *closed.factors[i].polynomial;
    report.factor_degrees.push_back(closed.factors[i].polynomial->degree());
  }
  report.quotient = poly_exact_div(*closed.product.polynomial, proper);
  report.determinant = *det_dispatch(a, options).polynomial;
  report.passed = *report.quotient == *report.determinant;
  return report;
}

}  // namespace hyperdet
