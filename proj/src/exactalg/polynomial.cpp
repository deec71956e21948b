#include "hyperdet/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "hyperdet/error.hpp"

namespace hyperdet {

namespace {

// Merges two canonical term lists, b scaled by sign (+1 or -1).
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const auto cmp = i->monomial <=> j->monomial;
    if (cmp < 0) {
      out.push_back(*i++);
    } else if (cmp > 0) {
      out.push_back(Term{j->monomial, sign > 0 ? j->coeff : Integer(-j->coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->coeff + j->coeff) : Integer(i->coeff - j->coeff);
      if (c != 0) out.push_back(Term{i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) out.push_back(Term{j->monomial, sign > 0 ? j->coeff : Integer(-j->coeff)});
  return out;
}

// Product of a[lo, hi) with b; each row t * b is already sorted because lex is
// a monomial order, so a balanced merge of the rows yields the canonical form.
std::vector<Term> multiply_range(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                                 const std::vector<Term>& b) {
  if (hi - lo == 1) {
    std::vector<Term> row;
    row.reserve(b.size());
    for (const auto& t : b) row.push_back(Term{a[lo].monomial * t.monomial, a[lo].coeff * t.coeff});
    return row;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return merge_terms(multiply_range(a, lo, mid, b), multiply_range(a, mid, hi, b), +1);
}

}  // namespace

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.push_back(Term{Monomial(), std::move(constant)});
}

Polynomial Polynomial::variable(EntryVar v) { return monomial(Monomial::variable(v), 1); }

Polynomial Polynomial::monomial(Monomial m, Integer coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.push_back(Term{std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.monomial.degree()));
  return d;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.monomial < x; });
  return (it != terms_.end() && it->monomial == m) ? it->coeff : Integer(0);
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<EntryVar> Polynomial::variables() const {
  std::vector<EntryVar> vars;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p;
  if (a.is_zero() || b.is_zero()) return p;
  // Rows are indexed by the shorter operand to keep the merge tree shallow.
  p.terms_ = a.size() <= b.size() ? multiply_range(a.terms_, 0, a.size(), b.terms_)
                                  : multiply_range(b.terms_, 0, b.size(), a.terms_);
  return p;
}

Polynomial operator-(Polynomial a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Polynomial Polynomial::scaled(const Integer& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Integer& c) const {
  Polynomial p;
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.monomial * m, t.coeff * c});
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (negative) {
      s += '-';
    } else if (!s.empty()) {
      s += '+';
    }
    Integer magnitude = abs(t.coeff);
    if (t.monomial.is_one()) {
      s += magnitude.get_str();
    } else {
      if (magnitude != 1) s += magnitude.get_str() + "*";
      s += t.monomial.to_string();
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_neg(const Polynomial& p) { return -p; }
Polynomial poly_scale(const Polynomial& p, const Integer& c) { return p.scaled(c); }

Polynomial poly_exact_div(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorKind::NotDivisible, "division by the zero polynomial");
  if (q.is_constant()) {
    const Integer& c = q.leading_term().coeff;
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t())) {
        throw Error(ErrorKind::NotDivisible, "coefficient not divisible by constant divisor");
      }
      out.push_back(Term{t.monomial, t.coeff / c});
    }
    return Polynomial::from_terms(std::move(out));
  }
  const Term& lead = q.leading_term();
  Polynomial remainder = p;
  std::vector<Term> quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.leading_term();
    if (!lead.monomial.divides(top.monomial) ||
        !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw Error(ErrorKind::NotDivisible, "nonzero remainder in exact division");
    }
    Term t{top.monomial.quotient(lead.monomial), top.coeff / lead.coeff};
    remainder -= q.times_monomial(t.monomial, t.coeff);
    quotient.push_back(std::move(t));
  }
  std::reverse(quotient.begin(), quotient.end());
  return Polynomial::from_terms(std::move(quotient));
}

Rational poly_eval(const Polynomial& p, const std::function<Rational(EntryVar)>& value) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational prod = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) {
      const Rational x = value(v);
      for (std::uint32_t i = 0; i < e; ++i) prod *= x;
    }
    sum += prod;
  }
  return sum;
}

Rational poly_eval(const Polynomial& p, const Assignment& assignment) {
  return poly_eval(p, [&assignment](EntryVar v) -> Rational {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw Error(ErrorKind::MissingVariable, v.to_string() + " is not assigned");
    return it->second;
  });
}

Polynomial substitute(const Polynomial& p, const std::function<Polynomial(EntryVar)>& image) {
  std::map<EntryVar, Polynomial> cache;
  Polynomial sum;
  for (const auto& t : p.terms()) {
    Polynomial prod(t.coeff);
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, image(v)).first;
      for (std::uint32_t i = 0; i < e; ++i) prod *= it->second;
    }
    sum += prod;
  }
  return sum;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    skip_ws();
    std::vector<Term> terms;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (first) fail("empty polynomial");
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (sign < 0) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term parse_term() {
    Integer coeff = 1;
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_digits();
      } else if (peek() == 'a') {
        EntryVar v = parse_var();
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<std::uint32_t>(parse_digits().get_ui());
        }
        factors.emplace_back(v, e);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Term{Monomial::from_factors(std::move(factors)), coeff};
  }

  EntryVar parse_var() {
    ++pos_;  // 'a'
    if (at_end()) fail("truncated variable");
    std::vector<int> index;
    if (peek() == '[') {
      ++pos_;
      while (true) {
        skip_ws();
        index.push_back(static_cast<int>(parse_digits().get_si()));
        skip_ws();
        if (at_end()) fail("unterminated '['");
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']'");
      }
    } else if (peek() == '{') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        index.push_back(peek() - '0');
        ++pos_;
      }
      if (at_end() || peek() != '}') fail("unterminated '{'");
      ++pos_;
    } else {
      fail("expected '[' or '{' after 'a'");
    }
    if (index.empty()) fail("variable without indices");
    try {
      return EntryVar(std::span<const int>(index));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "polynomial at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace hyperdet
