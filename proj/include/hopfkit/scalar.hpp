#pragma once

// Exact scalar arithmetic over Q and over the rational function field Q(q).
// A Scalar is a reduced fraction of integer-coefficient polynomials in q;
// plain rationals are the constant-polynomial case.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopfkit {

using Int = mpz_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t p)
      : std::runtime_error(what + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Dense polynomial in q over Z. Zero is the empty coefficient vector;
// otherwise the leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Int c0) {
    if (c0 != 0) c_.push_back(std::move(c0));
  }
  explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(Int coeff, std::size_t deg) {
    if (coeff == 0) return {};
    std::vector<Int> c(deg + 1);
    c[deg] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool isZero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Int& leading() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Int> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly mulScalar(const Int& k) const {
    if (k == 0) return {};
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] * k;
    return Poly(std::move(c));
  }

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial
  Int content() const {
    Int g = 0;
    for (const Int& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
  }

  // exact division by an integer, all coefficients must be divisible
  Poly divExactInt(const Int& k) const {
    std::vector<Int> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      mpz_divexact(c[i].get_mpz_t(), c_[i].get_mpz_t(), k.get_mpz_t());
    }
    return Poly(std::move(c));
  }

  // exact division, remainder must be zero (used after gcd computations)
  Poly divExact(const Poly& d) const {
    if (d.isZero()) throw DivisionByZero();
    Poly r = *this;
    std::vector<Int> qc;
    long dd = d.degree();
    while (!r.isZero() && r.degree() >= dd) {
      long shift = r.degree() - dd;
      Int qlead;
      mpz_divexact(qlead.get_mpz_t(), r.leading().get_mpz_t(), d.leading().get_mpz_t());
      if (static_cast<long>(qc.size()) < shift + 1) qc.resize(shift + 1);
      qc[shift] = qlead;
      r = r - d * Poly::monomial(qlead, static_cast<std::size_t>(shift));
    }
    if (!r.isZero()) throw std::runtime_error("Poly::divExact: nonzero remainder");
    return Poly(std::move(qc));
  }

  Int evalAt1() const {
    Int s = 0;
    for (const Int& x : c_) s += x;
    return s;
  }

  std::string toString() const {
    if (isZero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Int& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Int absA = abs(a);
      if (!out.empty())
        out += (a < 0) ? "-" : "+";
      else if (a < 0)
        out += "-";
      bool unitCoeff = (absA == 1) && i > 0;
      if (!unitCoeff) out += absA.get_str();
      if (i > 0) {
        if (!unitCoeff) out += "*";
        out += "q";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  std::vector<Int> c_;
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
};

namespace detail {

// primitive part, sign-normalized to positive leading coefficient
inline Poly primitivePart(const Poly& p) {
  if (p.isZero()) return p;
  Int c = p.content();
  if (p.leading() < 0) c = -c;
  return p.divExactInt(c);
}

// pseudo-remainder of a by b (prem), deg b <= deg a required by caller
inline Poly pseudoRem(Poly a, const Poly& b) {
  long db = b.degree();
  while (!a.isZero() && a.degree() >= db) {
    long shift = a.degree() - db;
    Poly t = b.mulScalar(a.leading());
    Poly lead = Poly::monomial(Int(1), static_cast<std::size_t>(shift));
    a = a.mulScalar(b.leading()) - t * lead;
  }
  return a;
}

inline Poly polyGcd(Poly a, Poly b) {
  if (a.isZero()) return primitivePart(b);
  if (b.isZero()) return primitivePart(a);
  Int c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  a = primitivePart(a);
  b = primitivePart(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.isZero()) {
    Poly r = pseudoRem(a, b);
    a = std::move(b);
    b = primitivePart(r);
  }
  return a.mulScalar(c);
}

}  // namespace detail

// Element of Q or Q(q): reduced fraction num/den of polynomials in q.
// Invariants: den nonzero with positive leading coefficient, gcd(num,den)=1
// (both integer content and polynomial factors removed), zero is 0/1.
class Scalar {
 public:
  enum class Field { Q, Qq };

  Scalar() : num_(), den_(Int(1)), field_(Field::Q) {}
  Scalar(long v) : num_(Int(v)), den_(Int(1)), field_(Field::Q) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Int v) : num_(Poly(std::move(v))), den_(Int(1)), field_(Field::Q) {}

  static Scalar rational(Int n, Int d) {
    Scalar s(Poly(std::move(n)), Poly(std::move(d)), Field::Q);
    return s;
  }
  static Scalar fraction(Poly n, Poly d) { return Scalar(std::move(n), std::move(d), Field::Qq); }
  static Scalar q(long power = 1) {
    if (power >= 0) return Scalar(Poly::monomial(Int(1), static_cast<std::size_t>(power)), Poly(Int(1)), Field::Qq);
    return Scalar(Poly(Int(1)), Poly::monomial(Int(1), static_cast<std::size_t>(-power)), Field::Qq);
  }

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_ == den_; }
  Field field() const { return field_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool isRationalForm() const { return num_.degree() <= 0 && den_.degree() <= 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, join(a, b));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, join(a, b));
  }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.num_, a.den_, a.field_); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_, join(a, b));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.isZero()) throw DivisionByZero();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_, join(a, b));
  }
  Scalar inverse() const {
    if (isZero()) throw DivisionByZero();
    return Scalar(den_, num_, field_);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  // canonical normal form makes fraction equality a representation comparison
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // substitute q = 1; throws on a pole
  Scalar atQ1() const {
    Int d = den_.evalAt1();
    if (d == 0) throw DivisionByZero();
    return rational(num_.evalAt1(), std::move(d));
  }

  std::string toString() const {
    if (den_ == Poly(Int(1))) return num_.toString();
    std::string n = num_.toString();
    std::string d = den_.toString();
    if (n.find_first_of("+-", 1) != std::string::npos || n[0] == '-') n = "(" + n + ")";
    if (d.find_first_of("+-*^", 1) != std::string::npos || d.size() > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

  static Scalar parse(const std::string& text);

 private:
  Poly num_, den_;
  Field field_;

  static Field join(const Scalar& a, const Scalar& b) {
    return (a.field_ == Field::Qq || b.field_ == Field::Qq) ? Field::Qq : Field::Q;
  }

  Scalar(Poly n, Poly d, Field f) : num_(std::move(n)), den_(std::move(d)), field_(f) { normalize(); }

  void normalize() {
    if (den_.isZero()) throw DivisionByZero();
    if (num_.isZero()) {
      den_ = Poly(Int(1));
      return;
    }
    Poly g = detail::polyGcd(num_, den_);
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

// --- textual scalar syntax -------------------------------------------------
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | atom ('^' int)?
//   atom    := int | 'q' | '(' expr ')'
//
// Examples: "5", "1/2", "q^2-1", "(q^2-1)/(q)", "-3*q".

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  Scalar parseAll() {
    Scalar v = expr();
    skipWs();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  void skipWs() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char c) {
    skipWs();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skipWs();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/'))
        v /= factor();
      else
        return v;
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar v = atom();
    if (eat('^')) {
      long e = integer();
      Scalar r = 1;
      Scalar base = e < 0 ? v.inverse() : v;
      for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
      return r;
    }
    return v;
  }
  Scalar atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Scalar v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return Scalar::q();
    }
    if (c >= '0' && c <= '9') return Scalar(Int(integer()));
    throw ParseError("expected number, 'q' or '('", pos_);
  }
  long integer() {
    skipWs();
    bool neg = eat('-');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') ++pos_;
    if (pos_ == start) throw ParseError("expected integer", pos_);
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }
};

}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) { return detail::ScalarParser(text).parseAll(); }

}  // namespace hopfkit
