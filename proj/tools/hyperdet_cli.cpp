#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "hyperdet/determinants.hpp"
#include "hyperdet/error.hpp"
#include "hyperdet/io.hpp"
#include "hyperdet/oracles.hpp"
#include "hyperdet/qpaths.hpp"
#include "hyperdet/rng.hpp"

namespace fs = std::filesystem;
using namespace hyperdet;

namespace {

enum Exit { kOk = 0, kOther = 1, kFormat = 2, kSize = 3, kParse = 4, kConsistency = 5 };

struct Flags {
  std::string input;
  std::string output;
  std::string witness_out;
  std::string policy = "default";
  std::string variant;
  std::uint64_t seed = 0;
  int bound = 10;
  std::size_t max_terms = 0;
  unsigned threads = 1;
  int samples = 50;
  bool json = false;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::WrongFormat:
    case ErrorKind::GrassmanFormat:
    case ErrorKind::Unsupported:
    case ErrorKind::NotSquare:
    case ErrorKind::WrongShape:
      return kFormat;
    case ErrorKind::SizeGuard:
      return kSize;
    case ErrorKind::Parse:
      return kParse;
    case ErrorKind::CalibrationFailure:
    case ErrorKind::NotDivisible:
      return kConsistency;
    default:
      return kOther;
  }
}

DetOptions options_from(const Flags& f) {
  DetOptions o;
  o.policy = parse_policy(f.policy);
  o.threads = std::max(1u, f.threads);
  if (f.max_terms > 0) {
    o.max_terms = f.max_terms;
  } else if (const char* env = std::getenv("HYPERDET_MAX_TERMS")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0) throw std::invalid_argument(env);
      o.max_terms = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("HYPERDET_MAX_TERMS is not a positive integer: ") + env);
    }
  }
  return o;
}

std::optional<Format> inline_format(const std::string& s) {
  static const std::regex re(R"(\s*\[?\s*(\d+(\s*[,x]\s*\d+)*)\s*\]?\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  std::vector<int> dims;
  std::string body = m[1];
  for (char& c : body)
    if (c == ',' || c == 'x') c = ' ';
  std::istringstream in(body);
  for (int n; in >> n;) dims.push_back(n);
  try {
    return Format(dims);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

MDMatrix load(const std::string& input) {
  if (fs::is_regular_file(input)) return matrix_from_json(read_json_file(input));
  if (auto f = inline_format(input)) return MDMatrix::symbolic(*f);
  throw Error(ErrorKind::Parse, "no such file and not a format: " + input);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::Parse, "cannot write " + path);
    }
  }
  std::ostream& operator()() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

Json result_json(const DetResult& r) {
  Json j;
  j["format"] = r.format.dims();
  j["method"] = to_string(r.method);
  if (r.is_symbolic()) {
    j["mode"] = "symbolic";
    j["text"] = r.polynomial->to_string();
    j["polynomial"] = polynomial_to_json(*r.polynomial);
  } else {
    j["mode"] = "numeric";
    j["value"] = to_string(*r.value);
  }
  j["normalization"] = Json{{"sign", r.normalization.sign},
                            {"content", to_string(r.normalization.content)},
                            {"anchor", r.normalization.anchor}};
  return j;
}

std::string render_selection(const std::vector<std::vector<int>>& sel) {
  std::string s;
  for (const auto& v : sel) {
    if (!s.empty()) s += ',';
    s += '{';
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    s += '}';
  }
  return s;
}

std::string render_subset(const Subset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int cmd_classify(const Flags& fl) {
  const Format f = load(fl.input).format();
  const FormatClass c = classify_format(f);
  Json j;
  j["format"] = f.dims();
  j["class"] = to_string(c.kind);
  j["mSequence"] = m_sequence(f);
  if (c.distinguished) j["distinguished"] = *c.distinguished + 1;
  if (c.kind == FormatKind::Boundary || c.kind == FormatKind::Square2D) j["degree"] = degree_boundary(f);
  if (c.kind == FormatKind::Grassman) {
    std::vector<int> base;
    for (std::size_t k = 0; k < f.arity(); ++k)
      if (k != *c.distinguished && f[k] > 1) base.push_back(f[k]);
    const int m_r = m_sequence(Format(base)).back();
    j["pluckerLength"] = binomial(static_cast<std::size_t>(f[*c.distinguished]), static_cast<std::size_t>(m_r));
  }
  Output out(fl.output);
  if (fl.json) {
    out() << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& [k, v] : j.items()) {
    out() << k << '=';
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) out() << (i ? "," : "") << v[i];
      out() << '\n';
    } else if (v.is_string()) {
      out() << v.get<std::string>() << '\n';
    } else {
      out() << v << '\n';
    }
  }
  return kOk;
}

int cmd_det(const Flags& fl) {
  const DetResult r = det_dispatch(load(fl.input), options_from(fl));
  Output out(fl.output);
  if (fl.json) out() << result_json(r).dump(2) << '\n';
  else out() << r.to_string() << '\n';
  return kOk;
}

int cmd_closed_det(const Flags& fl) {
  const ClosedDetResult c = closed_det(load(fl.input), options_from(fl));
  Output out(fl.output);
  if (fl.json) {
    Json factors = Json::array();
    for (std::size_t i = 0; i < c.minors.size(); ++i) {
      Json f = result_json(c.factors[i]);
      f["selections"] = c.minors[i].selections;
      factors.push_back(std::move(f));
    }
    Json j = result_json(c.product);
    j["factors"] = std::move(factors);
    out() << j.dump(2) << '\n';
  } else {
    out() << c.product.to_string() << '\n';
  }
  return kOk;
}

int cmd_minors(const Flags& fl) {
  const MDMatrix a = load(fl.input);
  const DetOptions o = options_from(fl);
  Output out(fl.output);
  Json all = Json::array();
  for (const auto& m : enumerate_minor_subformats(a.format())) {
    const DetResult r = det_dispatch(a.subtensor(m.selections), o);
    if (fl.json) {
      Json j = result_json(r);
      j["selections"] = m.selections;
      all.push_back(std::move(j));
    } else {
      out() << render_selection(m.selections) << ' ' << m.format.to_string() << ' ' << r.to_string() << '\n';
    }
  }
  if (fl.json) out() << all.dump(2) << '\n';
  return kOk;
}

int cmd_plucker(const Flags& fl) {
  const PluckerVector p = hyperplucker(load(fl.input), options_from(fl));
  Output out(fl.output);
  if (fl.json) {
    Json coords = Json::array();
    for (const auto& [j, r] : p.coordinates) {
      Json c = result_json(r);
      c["columns"] = j;
      coords.push_back(std::move(c));
    }
    out() << Json{{"coordinates", std::move(coords)}, {"allVanish", p.all_vanish}}.dump(2) << '\n';
  } else {
    for (const auto& [j, r] : p.coordinates) out() << "J=" << render_subset(j) << ' ' << r.to_string() << '\n';
    out() << "allVanish=" << (p.all_vanish ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_corank(const Flags& fl) {
  const CorankReport r = corank_22n(load(fl.input));
  Output out(fl.output);
  if (fl.json) out() << Json{{"rank", r.rank}, {"corankOne", r.corank_one}}.dump(2) << '\n';
  else out() << "rank=" << r.rank << "\ncorankOne=" << (r.corank_one ? "true" : "false") << '\n';
  return kOk;
}

int cmd_make_degenerate(const Flags& fl) {
  const Format f = load(fl.input).format();
  const auto [a, x] = make_degenerate(f, fl.seed);
  std::string witness_path = fl.witness_out;
  if (witness_path.empty() && !fl.output.empty()) {
    const fs::path p(fl.output);
    witness_path = (p.parent_path() / p.stem()).string() + ".witness.json";
  }
  Output out(fl.output);
  out() << matrix_to_json(a).dump(2) << '\n';
  if (!witness_path.empty()) write_json_file(witness_path, witness_to_json(f, x));
  return kOk;
}

struct Check {
  std::string name;
  std::string status;
  std::string detail;
};

int cmd_verify(const Flags& fl) {
  const Format f = load(fl.input).format();
  const DetOptions o = options_from(fl);
  const int n = std::max(1, fl.samples);
  std::vector<Check> checks;
  auto add = [&](std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
  };

  const MDMatrix base = MDMatrix::random_integer(f, fl.seed, fl.bound);
  const DetResult first = det_dispatch(base, o);

  int bad = 0;
  for (int i = 0; i < n; ++i) {
    const auto [a, x] = make_degenerate(f, fl.seed + static_cast<std::uint64_t>(i));
    if (!witness_check(a, x) || !det_dispatch(a, o).is_zero()) ++bad;
  }
  add("degenerate_vanish", bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " vanish");

  bad = 0;
  for (int i = 0; i < n; ++i)
    if (det_dispatch(MDMatrix::random_integer(f, fl.seed + static_cast<std::uint64_t>(i), fl.bound), o).is_zero()) ++bad;
  add("generic_nonzero", bad == 0, std::to_string(n - bad) + "/" + std::to_string(n) + " nonzero");

  bad = 0;
  int total = 0;
  SeededRng rng(fl.seed);
  for (std::size_t axis = 0; axis < f.arity(); ++axis)
    for (int t = 0; t < std::min(n, 20); ++t, ++total)
      if (*det_dispatch(gl_action(base, axis, random_unimodular(static_cast<std::size_t>(f[axis]), rng)), o).value !=
          *first.value)
        ++bad;
  add("sl_invariance", bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " unchanged");

  DetOptions many = o;
  many.threads = std::max(2u, o.threads);
  add("threads_deterministic", det_dispatch(base, many).to_string() == first.to_string(), "");

  std::optional<Polynomial> p;
  try {
    p = det_dispatch(MDMatrix::symbolic(f), o).polynomial;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeGuard) throw;
    for (const char* name : {"primitive", "multidegree", "numeric_agrees", "homogeneity"})
      checks.push_back({name, "skipped", "symbolic determinant exceeds max-terms"});
  }
  if (p) {
    add("primitive", p->content() == 1, "content " + to_string(p->content()));
    const auto md = multidegree(*p, f);
    bool uniform = md.has_value();
    for (std::size_t k = 0; uniform && k < f.arity(); ++k) uniform = (*md)[k] * f[k] == p->degree();
    add("multidegree", uniform, "degree " + std::to_string(p->degree()));
    bad = 0;
    for (int i = 0; i < std::min(n, 10); ++i) {
      const MDMatrix a = MDMatrix::random_integer(f, fl.seed + static_cast<std::uint64_t>(i), fl.bound);
      if (evaluate_at(*p, a) != *det_dispatch(a, o).value) ++bad;
    }
    add("numeric_agrees", bad == 0, "");
    std::vector<Rational> doubled;
    for (const auto& v : base.values()) doubled.push_back(v * 2);
    Rational scale = 1;
    for (int i = 0; i < p->degree(); ++i) scale *= 2;
    add("homogeneity", *det_dispatch(MDMatrix::numeric(f, doubled), o).value == scale * *first.value, "");
  }

  bool passed = true;
  Json jc = Json::array();
  for (const auto& c : checks) {
    passed = passed && c.status != "fail";
    jc.push_back(Json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  }
  Output out(fl.output);
  out() << Json{{"format", f.dims()}, {"method", to_string(first.method)}, {"seed", fl.seed}, {"samples", n},
                {"checks", std::move(jc)}, {"passed", passed}}
               .dump(2)
        << '\n';
  return passed ? kOk : kConsistency;
}

int cmd_diagonal(const Flags& fl) {
  const Format f = load(fl.input).format();
  const FormatClass c = classify_format(f);
  const bool boundary = fl.variant.empty() ? c.kind == FormatKind::Boundary || c.kind == FormatKind::Square2D
                                           : fl.variant == "boundary";
  if (!fl.variant.empty() && fl.variant != "boundary" && fl.variant != "closed")
    throw Error(ErrorKind::Parse, "variant must be closed or boundary");
  Monomial m;
  if (!boundary) {
    m = diagonal_monomial(f, DiagonalVariant::Closed);
  } else {
    std::size_t pos = 0;
    const Format base = boundary_base(f, &pos);
    const Monomial local = diagonal_monomial(base, DiagonalVariant::Boundary);
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < f.arity(); ++k)
      if (f[k] > 1 && k != pos) kept.push_back(k);
    std::vector<Monomial::Factor> factors;
    for (const auto& [v, e] : local.factors()) {
      std::vector<int> idx(f.arity(), 1);
      for (std::size_t i = 0; i < kept.size(); ++i) idx[kept[i]] = v[i];
      idx[pos] = v[kept.size()];
      factors.emplace_back(EntryVar(idx), e);
    }
    m = Monomial::from_factors(std::move(factors));
  }
  Output out(fl.output);
  if (fl.json) out() << Json{{"variant", boundary ? "boundary" : "closed"}, {"degree", m.degree()}, {"monomial", m.to_string()}}.dump(2) << '\n';
  else out() << m.to_string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperdeterminants of multidimensional matrices"};
  app.require_subcommand(1);
  Flags fl;
  using Handler = int (*)(const Flags&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("input", fl.input, "matrix JSON file or a format such as 2,2,3")->required();
    s->add_option("-o,--output", fl.output, "write the result to this file");
    s->add_option("--seed", fl.seed, "random seed")->capture_default_str();
    s->add_option("--bound", fl.bound, "entry bound for random samples")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--max-terms", fl.max_terms, "cap on generated terms (default 10000000 or HYPERDET_MAX_TERMS)")
        ->check(CLI::PositiveNumber);
    s->add_option("--threads", fl.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_option("--policy", fl.policy, "sum policy, e.g. tailSigmaQ/sigmaQ/shifted")->capture_default_str();
    s->add_option("--samples", fl.samples, "samples for verify")->capture_default_str()->check(CLI::PositiveNumber);
    s->add_flag("--json", fl.json, "machine-readable output");
    commands.emplace_back(s, h);
    return s;
  };
  sub("classify", "format class, m-sequence and degree", cmd_classify);
  sub("det", "the determinant", cmd_det);
  sub("closed-det", "product of the determinants of all minors", cmd_closed_det);
  sub("minors", "all minor subformats with their determinants", cmd_minors);
  sub("plucker", "hyperplucker coordinates of a grassman-format matrix", cmd_plucker);
  sub("corank", "rank of the quadratic form of a 2x2xn matrix", cmd_corank);
  sub("make-degenerate", "a random degenerate matrix and its witness", cmd_make_degenerate)
      ->add_option("--witness-out", fl.witness_out, "witness file (default <output stem>.witness.json)");
  sub("verify", "invariant battery on seeded samples", cmd_verify);
  sub("diagonal", "the diagonal monomial", cmd_diagonal)
      ->add_option("--variant", fl.variant, "closed or boundary (default by format class)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    for (const auto& [s, h] : commands)
      if (s->parsed()) return h(fl);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
