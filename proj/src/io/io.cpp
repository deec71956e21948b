#include "hyperdet/io.hpp"

#include <fstream>
#include <map>

#include "hyperdet/error.hpp"

namespace hyperdet {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(std::string(what) + " must contain integers");
    const auto x = v.get<std::int64_t>();
    if (x < 0 || x > 1'000'000) fail(std::string(what) + " value out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

Format format_from_json(const Json& j) {
  const auto dims = int_list(field(j, "format"), "format");
  try {
    return Format(dims);
  } catch (const Error& e) {
    fail(e.what());
  }
}

Json format_to_json(const Format& f) { return Json(f.dims()); }

}  // namespace

Json rational_to_json(const Rational& r) {
  if (is_integral(r) && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("scalar entries must be integers or \"p/q\" strings");
}

Json matrix_to_json(const MDMatrix& a) {
  Json j;
  j["format"] = format_to_json(a.format());
  if (a.is_symbolic()) {
    if (!(a == MDMatrix::symbolic(a.format())))
      throw Error(ErrorKind::WrongShape, "only the generic symbolic matrix has a file form");
    j["mode"] = "symbolic";
    return j;
  }
  j["mode"] = "numeric";
  Json entries = Json::array();
  for (const auto& v : a.values()) entries.push_back(rational_to_json(v));
  j["entries"] = std::move(entries);
  return j;
}

MDMatrix matrix_from_json(const Json& j) {
  const Format f = format_from_json(j);
  const Json& mode = field(j, "mode");
  if (mode == "symbolic") return MDMatrix::symbolic(f);
  if (mode != "numeric") fail("mode must be \"numeric\" or \"symbolic\"");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) fail("entries must be an array");
  if (entries.size() != f.volume())
    fail("format " + f.to_string() + " needs " + std::to_string(f.volume()) + " entries, got " +
         std::to_string(entries.size()));
  std::vector<Rational> values;
  values.reserve(entries.size());
  for (const auto& e : entries) values.push_back(rational_from_json(e));
  return MDMatrix::numeric(f, std::move(values));
}

Json polynomial_to_json(const Polynomial& p) {
  const auto vars = p.variables();
  std::map<EntryVar, std::size_t> index;
  Json jv = Json::array();
  for (const auto& v : vars) {
    index.emplace(v, index.size());
    jv.push_back(v.index());
  }
  Json jt = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (const auto& [v, e] : t.monomial.factors()) exps.push_back(Json::array({index.at(v), e}));
    jt.push_back(Json{{"coeff", to_string(t.coeff)}, {"exps", std::move(exps)}});
  }
  return Json{{"vars", std::move(jv)}, {"terms", std::move(jt)}};
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<EntryVar> vars;
  const Json& jv = field(j, "vars");
  if (!jv.is_array()) fail("vars must be an array");
  for (const auto& v : jv) {
    try {
      vars.emplace_back(int_list(v, "variable index"));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      fail(e.what());
    }
  }
  const Json& jt = field(j, "terms");
  if (!jt.is_array()) fail("terms must be an array");
  std::vector<Term> terms;
  for (const auto& t : jt) {
    const Json& c = field(t, "coeff");
    if (!c.is_string()) fail("coeff must be a decimal string");
    std::vector<Monomial::Factor> factors;
    for (const auto& e : field(t, "exps")) {
      const auto pair = int_list(e, "exponent pair");
      if (pair.size() != 2 || static_cast<std::size_t>(pair[0]) >= vars.size() || pair[1] < 1) fail("bad exponent pair");
      factors.emplace_back(vars[static_cast<std::size_t>(pair[0])], static_cast<std::uint32_t>(pair[1]));
    }
    terms.push_back({Monomial::from_factors(std::move(factors)), parse_integer(c.get<std::string>())});
  }
  return Polynomial::from_terms(std::move(terms));
}

Json witness_to_json(const Format& f, const DegeneracyWitness& x) {
  Json vectors = Json::array();
  for (const auto& v : x.vectors) {
    Json jv = Json::array();
    for (const auto& c : v) jv.push_back(rational_to_json(c));
    vectors.push_back(std::move(jv));
  }
  return Json{{"format", format_to_json(f)}, {"vectors", std::move(vectors)}};
}

DegeneracyWitness witness_from_json(const Json& j) {
  const Format f = format_from_json(j);
  const Json& vectors = field(j, "vectors");
  if (!vectors.is_array() || vectors.size() != f.arity()) fail("one witness vector per direction required");
  DegeneracyWitness x;
  for (std::size_t k = 0; k < f.arity(); ++k) {
    const Json& v = vectors[k];
    if (!v.is_array() || v.size() != static_cast<std::size_t>(f[k])) fail("witness vector length mismatch");
    std::vector<Rational> coords;
    for (const auto& c : v) coords.push_back(rational_from_json(c));
    x.vectors.push_back(std::move(coords));
  }
  return x;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace hyperdet
