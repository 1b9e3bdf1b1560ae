#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

/// Exponent vector of a power product x1^a1 * ... * xr^ar.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  Monomial(std::initializer_list<int> e) : exp(e) {}

  std::size_t nvars() const { return exp.size(); }

  int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

  long weighted_degree(const std::vector<long>& weights) const {
    long d = 0;
    for (std::size_t i = 0; i < exp.size(); ++i) d += weights[i] * exp[i];
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m(exp.size());
    for (std::size_t i = 0; i < exp.size(); ++i) m.exp[i] = exp[i] + o.exp[i];
    return m;
  }

  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Graded lexicographic order: lower total degree first, then lex with x1
/// dominant. Fixed globally for canonical printing and basis selection.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Within a degree: larger exponent on earlier variables first.
    for (std::size_t i = 0; i < a.exp.size(); ++i) {
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    return false;
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (sgn(c) != 0) p.terms_[Monomial(nvars)] = c;
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t i) {
    // i is zero-based
    Polynomial p(nvars);
    Monomial m(nvars);
    m.exp[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  static Polynomial term(std::size_t nvars, const Monomial& m, const Rational& c) {
    Polynomial p(nvars);
    if (sgn(c) != 0) p.terms_[m] = c;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
  }

  /// Lowest total degree among terms; -1 for zero.
  int order() const {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
  }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coeff(Monomial(nvars_)); }

  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& o) const {
    check_vars(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

  Polynomial operator*(const Polynomial& o) const {
    check_vars(o);
    Polynomial r(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  Polynomial operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  /// Drop all terms of total degree > d.
  Polynomial truncated(int d) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() <= d) r.terms_[m] = c;
    return r;
  }

  /// Keep only the homogeneous part of total degree d.
  Polynomial homogeneous_part(int d) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_[m] = c;
    return r;
  }

  Polynomial derivative(std::size_t i) const {
    // i zero-based
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.exp[i] == 0) continue;
      Monomial m2 = m;
      m2.exp[i] -= 1;
      r.add_term(m2, c * m.exp[i]);
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& x) const {
    Rational v = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int e = 0; e < m.exp[i]; ++e) t *= x[i];
      v += t;
    }
    return v;
  }

  /// Substitute xi -> args[i]; if trunc >= 0, truncate intermediate products
  /// to total degree trunc.
  Polynomial substitute(const std::vector<Polynomial>& args, int trunc = -1) const {
    if (args.size() != nvars_) throw std::invalid_argument("substitute: arity");
    std::size_t out_vars = args.empty() ? 0 : args[0].nvars();
    Polynomial r(out_vars);
    for (const auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(out_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (int e = 0; e < m.exp[i]; ++e) {
          t = t * args[i];
          if (trunc >= 0) t = t.truncated(trunc);
        }
      }
      r += t;
    }
    return r;
  }

  /// True iff every term has the given weighted degree.
  bool is_weighted_homogeneous(const std::vector<long>& weights, long wdeg) const {
    for (const auto& [m, c] : terms_)
      if (m.weighted_degree(weights) != wdeg) return false;
    return true;
  }

  std::string str() const;

 private:
  void check_vars(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  }

  std::size_t nvars_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// A polynomial together with a truncation order; terms above the order are
/// identically dropped.
struct Jet {
  Polynomial poly;
  int order = 0;

  Jet() = default;
  Jet(const Polynomial& p, int d) : poly(p.truncated(d)), order(d) {}
};

inline Jet truncate(const Polynomial& p, int d) { return Jet(p, d); }

// ---------------------------------------------------------------------------
// Canonical printing: terms in graded-lex order, explicit '*', rationals p/q.

inline std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool unit = (a == 1);
    bool has_var = m.degree() > 0;
    if (!unit || !has_var) os << a.get_str();
    bool need_star = !unit || !has_var;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
      need_star = true;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

// ---------------------------------------------------------------------------
// Parser for the expression grammar: integers, rationals "p/q", variables
// "x1".."x9", operators + - * ^, parentheses; '^' binds tightest; unary minus
// allowed; whitespace insignificant.

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& text, std::size_t nvars)
      : s_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial p = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial parse_sum() {
    bool neg = false;
    skip_ws();
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial p = parse_product();
    if (neg) p = -p;
    for (;;) {
      if (accept('+')) p += parse_product();
      else if (accept('-')) p -= parse_product();
      else break;
    }
    return p;
  }

  Polynomial parse_product() {
    Polynomial p = parse_power();
    while (accept('*')) p *= parse_power();
    return p;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (accept('^')) {
      skip_ws();
      long e = parse_integer();
      if (e < 0) throw ParseError("negative exponent", pos_);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_sum();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-') {  // unary minus inside a product, e.g. "2*-x1"
      ++pos_;
      return -parse_power();
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected variable index after 'x'", pos_);
      int idx = s_[pos_] - '0';
      ++pos_;
      if (idx < 1 || static_cast<std::size_t>(idx) > nvars_)
        throw ParseError("variable index exceeds variable count", pos_ - 1);
      return Polynomial::variable(nvars_, static_cast<std::size_t>(idx - 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = parse_integer();
      if (accept('/')) {
        skip_ws();
        long den = parse_integer();
        if (den == 0) throw ParseError("zero denominator", pos_);
        return Polynomial::constant(nvars_, rat(num, den));
      }
      return Polynomial::constant(nvars_, rat(num));
    }
    throw ParseError("unexpected character", pos_);
  }

  long parse_integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer", pos_);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return neg ? -v : v;
  }

  const std::string& s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, std::size_t nvars) {
  return detail::PolyParser(text, nvars).parse();
}

}  // namespace germlab
