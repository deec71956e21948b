#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperdet/determinants.hpp"
#include "hyperdet/error.hpp"
#include "hyperdet/oracles.hpp"
#include "hyperdet/qpaths.hpp"

namespace py = pybind11;
using namespace hyperdet;

namespace {

MDMatrix make_matrix(const std::vector<int>& dims, const std::optional<py::sequence>& entries) {
  const Format f(dims);
  if (!entries) return MDMatrix::symbolic(f);
  std::vector<Rational> values;
  for (const auto& e : *entries) values.push_back(parse_rational(py::str(e).cast<std::string>()));
  if (values.size() != f.volume()) throw Error(ErrorKind::SizeMismatch, "entry count does not match the format");
  return MDMatrix::numeric(f, std::move(values));
}

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

py::object result(const DetResult& r) {
  if (r.is_symbolic()) return py::str(r.polynomial->to_string());
  return fraction(*r.value);
}

DetOptions options(unsigned threads, std::optional<std::size_t> max_terms, const std::string& policy) {
  DetOptions o;
  o.threads = threads;
  if (max_terms) o.max_terms = *max_terms;
  o.policy = parse_policy(policy);
  return o;
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& r : v) out.append(fraction(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_hyperdet, m) {
  m.doc() = "Exact hyperdeterminants of multidimensional matrices";
  py::register_exception<Error>(m, "HyperdetError", PyExc_ValueError);

  m.def("classify", [](const std::vector<int>& dims) {
    const Format f(dims);
    const FormatClass c = classify_format(f);
    py::dict d;
    d["class"] = to_string(c.kind);
    d["m_sequence"] = m_sequence(f);
    d["distinguished"] = c.distinguished ? py::cast(*c.distinguished) : py::none();
    return d;
  }, py::arg("format"));

  m.def("degree_boundary", [](const std::vector<int>& dims) { return degree_boundary(Format(dims)); }, py::arg("format"));

  m.def("term_count", [](const std::vector<int>& dims, unsigned threads) {
    return boundary_term_count(Format(dims), options(threads, std::nullopt, "default"));
  }, py::arg("format"), py::arg("threads") = 1);

  m.def("det", [](const std::vector<int>& dims, std::optional<py::sequence> entries, unsigned threads,
                  std::optional<std::size_t> max_terms, const std::string& policy) {
    const MDMatrix a = make_matrix(dims, entries);
    const DetOptions o = options(threads, max_terms, policy);
    py::gil_scoped_release release;
    DetResult r = det_dispatch(a, o);
    py::gil_scoped_acquire acquire;
    return result(r);
  }, py::arg("format"), py::arg("entries") = py::none(), py::kw_only(), py::arg("threads") = 1,
        py::arg("max_terms") = py::none(), py::arg("policy") = "default");

  m.def("closed_det", [](const std::vector<int>& dims, std::optional<py::sequence> entries, unsigned threads) {
    return result(closed_det(make_matrix(dims, entries), options(threads, std::nullopt, "default")).product);
  }, py::arg("format"), py::arg("entries") = py::none(), py::kw_only(), py::arg("threads") = 1);

  m.def("calibrate", [] {
    py::list out;
    for (const auto& r : calibrate()) out.append(py::make_tuple(to_string(r.policy), r.passed, r.failures));
    return out;
  });

  m.def("make_degenerate", [](const std::vector<int>& dims, std::uint64_t seed) {
    const auto [a, x] = make_degenerate(Format(dims), seed);
    py::list witness;
    for (const auto& v : x.vectors) witness.append(fractions(v));
    return py::make_tuple(fractions(a.values()), witness);
  }, py::arg("format"), py::arg("seed") = 0);

  m.def("diagonal_monomial", [](const std::vector<int>& dims, const std::string& variant) {
    if (variant != "closed" && variant != "boundary") throw Error(ErrorKind::Parse, "variant must be closed or boundary");
    return diagonal_monomial(Format(dims), variant == "closed" ? DiagonalVariant::Closed : DiagonalVariant::Boundary)
        .to_string();
  }, py::arg("format"), py::arg("variant") = "closed");

  m.def("hyperplucker", [](const std::vector<int>& dims, std::optional<py::sequence> entries) {
    const PluckerVector p = hyperplucker(make_matrix(dims, entries));
    py::list coords;
    for (const auto& [j, r] : p.coordinates) coords.append(py::make_tuple(py::tuple(py::cast(j)), result(r)));
    return py::make_tuple(coords, p.all_vanish);
  }, py::arg("format"), py::arg("entries") = py::none());

  m.def("corank_22n", [](const std::vector<int>& dims, py::sequence entries) {
    const CorankReport r = corank_22n(make_matrix(dims, entries));
    return py::make_tuple(r.rank, r.corank_one);
  }, py::arg("format"), py::arg("entries"));
}
