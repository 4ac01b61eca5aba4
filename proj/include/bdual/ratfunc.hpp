#ifndef BDUAL_RATFUNC_HPP
#define BDUAL_RATFUNC_HPP

// Exact scalar arithmetic for the field Q(q): arbitrary-precision rationals,
// Laurent polynomials in q, and canonical-form rational functions.
//
// Canonical form of a RatFunc:
//   * numerator and denominator are ordinary polynomials in q (exponents >= 0),
//   * they are not both divisible by q,
//   * gcd(num, den) = 1 in Q[q],
//   * the denominator has integer coefficients, content 1 and a positive
//     leading coefficient (the numerator absorbs any rational scale).
// Equality is syntactic comparison of canonical forms.

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bdual {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

struct DivisionByZeroError : std::domain_error {
  explicit DivisionByZeroError(const std::string& what)
      : std::domain_error(what) {}
};

struct SizeGuardError : std::runtime_error {
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// BigRat: exact rational number (thin invariant-preserving wrapper over GMP).
// ---------------------------------------------------------------------------
class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(long n) : v_(n) {}  // NOLINT: implicit by design for literals
  BigRat(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZeroError("BigRat: zero denominator");
    v_.canonicalize();
  }
  explicit BigRat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit BigRat(const mpz_class& n) : v_(n) {}

  static BigRat from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw ParseError("BigRat: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw DivisionByZeroError("BigRat: zero denominator");
    v.canonicalize();
    return BigRat(v);
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat operator+(const BigRat& o) const { return BigRat(mpq_class(v_ + o.v_)); }
  BigRat operator-(const BigRat& o) const { return BigRat(mpq_class(v_ - o.v_)); }
  BigRat operator*(const BigRat& o) const { return BigRat(mpq_class(v_ * o.v_)); }
  BigRat operator/(const BigRat& o) const {
    if (o.is_zero()) throw DivisionByZeroError("BigRat: division by zero");
    return BigRat(mpq_class(v_ / o.v_));
  }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) { return *this = *this / o; }

  bool operator==(const BigRat& o) const { return v_ == o.v_; }
  bool operator!=(const BigRat& o) const { return v_ != o.v_; }
  bool operator<(const BigRat& o) const { return v_ < o.v_; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  // "a" when the denominator is 1, "a/b" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const BigRat& x) { return x.is_zero(); }

// ---------------------------------------------------------------------------
// LaurentPoly: finitely supported map exponent -> nonzero BigRat coefficient.
// ---------------------------------------------------------------------------
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) t_[0] = BigRat(c); }  // NOLINT
  explicit LaurentPoly(const BigRat& c) { if (!c.is_zero()) t_[0] = c; }

  static LaurentPoly monomial(const BigRat& c, long e) {
    LaurentPoly p;
    if (!c.is_zero()) p.t_[e] = c;
    return p;
  }
  static LaurentPoly q(long e = 1) { return monomial(BigRat(1), e); }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second.is_one();
  }
  // Nonzero monomial c*q^e?
  bool is_monomial() const { return t_.size() == 1; }

  long min_exp() const { require_nonzero("min_exp"); return t_.begin()->first; }
  long max_exp() const { require_nonzero("max_exp"); return t_.rbegin()->first; }

  BigRat coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? BigRat(0) : it->second;
  }
  BigRat leading_coeff() const { require_nonzero("leading_coeff"); return t_.rbegin()->second; }
  const std::map<long, BigRat>& terms() const { return t_; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.t_) {
      auto it = r.t_.find(e);
      if (it == r.t_.end()) {
        r.t_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : t_)
      for (const auto& [e2, c2] : o.t_) {
        long e = e1 + e2;
        auto it = r.t_.find(e);
        if (it == r.t_.end()) {
          BigRat c = c1 * c2;
          if (!c.is_zero()) r.t_[e] = c;
        } else {
          it->second += c1 * c2;
          if (it->second.is_zero()) r.t_.erase(it);
        }
      }
    return r;
  }
  LaurentPoly scaled(const BigRat& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : t_) r.t_[e] = k * c;
    return r;
  }
  // Multiplication by q^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentPoly& o) const { return t_ != o.t_; }

  BigRat eval(const BigRat& x) const {
    if (t_.empty()) return BigRat(0);
    if (x.is_zero() && min_exp() < 0)
      throw PoleError("LaurentPoly: evaluating negative power at q = 0");
    // Horner over ascending exponents: p = sum c_e q^e
    //   = q^{e_min} (c_0 + q^{d1}(c_1 + q^{d2}(...)))
    BigRat acc(0);
    long prev_e = 0;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!acc.is_zero()) {
        for (long k = 0; k < prev_e - it->first; ++k) acc *= x;
      }
      acc += it->second;
      prev_e = it->first;
    }
    long e = min_exp();
    if (e > 0) {
      for (long k = 0; k < e; ++k) acc *= x;
    } else if (e < 0) {
      if (x.is_zero()) throw PoleError("LaurentPoly: pole at q = 0");
      BigRat p(1);
      for (long k = 0; k < -e; ++k) p *= x;
      acc /= p;
    }
    return acc;
  }

  // Ascending-exponent human/machine readable form, e.g. "-1 + 1*q^2".
  std::string str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : t_) {
      if (!first) out += " + ";
      first = false;
      if (e == 0) {
        out += c.str();
      } else if (e == 1) {
        out += c.str() + "*q";
      } else {
        out += c.str() + "*q^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  void require_nonzero(const char* who) const {
    if (t_.empty())
      throw std::logic_error(std::string("LaurentPoly::") + who + " on zero");
  }
  std::map<long, BigRat> t_;
};

namespace detail {

// Remainder of polynomial division in Q[q] (both args must have exponents >= 0).
inline LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
  long db = b.max_exp();
  const BigRat lb = b.leading_coeff();
  while (!a.is_zero() && a.max_exp() >= db) {
    BigRat f = a.leading_coeff() / lb;
    a = a - b.scaled(f).shifted(a.max_exp() - db);
  }
  return a;
}

// Monic gcd in Q[q]; gcd(0,0) = 0.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_mod(a, b);
    a = b;
    // Rescale to keep coefficient growth in check (any unit multiple works).
    b = r.is_zero() ? r : r.scaled(BigRat(1) / r.leading_coeff());
  }
  if (!a.is_zero()) a = a.scaled(BigRat(1) / a.leading_coeff());
  return a;
}

// Exact quotient a / b in Q[q]; throws if the division is not exact.
inline LaurentPoly poly_divexact(LaurentPoly a, const LaurentPoly& b) {
  LaurentPoly qout;
  long db = b.max_exp();
  const BigRat lb = b.leading_coeff();
  while (!a.is_zero() && a.max_exp() >= db) {
    BigRat f = a.leading_coeff() / lb;
    long sh = a.max_exp() - db;
    qout = qout + LaurentPoly::monomial(f, sh);
    a = a - b.scaled(f).shifted(sh);
  }
  if (!a.is_zero())
    throw std::logic_error("poly_divexact: division is not exact");
  return qout;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// RatFunc: element of Q(q) in canonical form (see file header).
// ---------------------------------------------------------------------------
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT: implicit for literals
  explicit RatFunc(const BigRat& c) : num_(c), den_(1) {}
  explicit RatFunc(const LaurentPoly& p) : num_(p), den_(1) { normalize(); }
  RatFunc(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static RatFunc q(long e = 1) { return RatFunc(LaurentPoly::q(e)); }
  // q^{-1} - q, the recurring Hecke coefficient.
  static RatFunc qinv_minus_q() { return q(-1) - q(1); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  RatFunc operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    RatFunc r;
    if (den_ == o.den_) {
      r.num_ = num_ + o.num_;
      r.den_ = den_;
    } else {
      r.num_ = num_ * o.den_ + o.num_ * den_;
      r.den_ = den_ * o.den_;
    }
    r.normalize();
    return r;
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    RatFunc r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
  }
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inv() const {
    if (is_zero()) throw DivisionByZeroError("RatFunc: inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
  }

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  BigRat eval(const BigRat& point) const {
    BigRat d = den_.eval(point);
    if (d.is_zero())
      throw PoleError("RatFunc: evaluation point is a pole (den vanishes)");
    return num_.eval(point) / d;
  }

  // Canonical serialization, e.g. "( -1 + 1*q^2 ) / ( 1*q )".
  std::string str() const {
    return "( " + num_.str() + " ) / ( " + den_.str() + " )";
  }

  static RatFunc parse(const std::string& s);

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZeroError("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    // Step 1: clear shared q-powers so both parts become polynomials with
    // at least one of them having a nonzero constant term.
    long en = num_.min_exp();
    long ed = den_.min_exp();
    num_ = num_.shifted(-en);
    den_ = den_.shifted(-ed);
    long p = en - ed;  // leftover power of q on the numerator side
    if (p >= 0) {
      num_ = num_.shifted(p);
    } else {
      den_ = den_.shifted(-p);
    }
    // Step 2: cancel the polynomial gcd. Monomial denominators need no work:
    // after step 1, gcd(num, c*q^k) is already 1.
    if (!den_.is_monomial()) {
      LaurentPoly g = detail::poly_gcd(num_, den_);
      if (!g.is_zero() && g.max_exp() > 0) {
        num_ = detail::poly_divexact(num_, g);
        den_ = detail::poly_divexact(den_, g);
      }
    }
    // Step 3: make the denominator primitive-integer with positive leading
    // coefficient; the numerator absorbs the rational scale.
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& [e, c] : den_.terms()) {
      (void)e;
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
      lcm_den = l;
    }
    for (const auto& [e, c] : den_.terms()) {
      (void)e;
      mpz_class scaled_num = c.numerator() * (lcm_den / c.denominator());
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), scaled_num.get_mpz_t());
      gcd_num = g;
    }
    BigRat alpha(mpq_class(lcm_den, gcd_num));
    if (den_.leading_coeff().sign() < 0) alpha = -alpha;
    if (!alpha.is_one()) {
      num_ = num_.scaled(alpha);
      den_ = den_.scaled(alpha);
    }
  }

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

// Free-function aliases for the field operations.
inline RatFunc rf_add(const RatFunc& a, const RatFunc& b) { return a + b; }
inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) { return a * b; }
inline RatFunc rf_inv(const RatFunc& a) { return a.inv(); }
inline BigRat rf_eval(const RatFunc& a, const BigRat& point) {
  return a.eval(point);
}

namespace detail {

// Recursive-descent parser for the canonical textual form. Grammar:
//   ratfunc := '(' poly ')' '/' '(' poly ')' | poly
//   poly    := term (('+'|'-') term)*
//   term    := rational ('*' qpow)? | ('-')? qpow
//   qpow    := 'q' ('^' integer)?
class RatFuncParser {
 public:
  explicit RatFuncParser(const std::string& s) : s_(s), pos_(0) {}

  RatFunc parse() {
    skip_ws();
    LaurentPoly num, den(1);
    if (peek() == '(') {
      num = parse_paren_poly();
      skip_ws();
      if (pos_ < s_.size() && peek() == '/') {
        ++pos_;
        skip_ws();
        if (peek() != '(') fail("expected '(' after '/'");
        den = parse_paren_poly();
      }
    } else {
      num = parse_poly();
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return RatFunc(num, den);
  }

 private:
  LaurentPoly parse_paren_poly() {
    expect('(');
    LaurentPoly p = parse_poly();
    skip_ws();
    expect(')');
    return p;
  }

  LaurentPoly parse_poly() {
    LaurentPoly p;
    skip_ws();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    else if (peek() == '+') { ++pos_; }
    p = p + parse_term(neg);
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      p = p + parse_term(c == '-');
    }
    return p;
  }

  LaurentPoly parse_term(bool neg) {
    skip_ws();
    // Canonical output carries signed coefficients after the " + " joiner,
    // so a term may itself start with a sign.
    while (pos_ < s_.size() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    BigRat coef(1);
    bool have_coef = false;
    if (isdigit(peek())) {
      coef = parse_rational();
      have_coef = true;
    }
    long e = 0;
    skip_ws();
    bool want_q = false;
    if (have_coef && pos_ < s_.size() && peek() == '*') {
      ++pos_;
      skip_ws();
      want_q = true;  // '*' must be followed by a q power
    }
    if (pos_ < s_.size() && peek() == 'q') {
      ++pos_;
      e = 1;
      if (pos_ < s_.size() && peek() == '^') {
        ++pos_;
        e = parse_integer();
      }
    } else if (want_q || !have_coef) {
      fail("expected a term");
    }
    if (neg) coef = -coef;
    return LaurentPoly::monomial(coef, e);
  }

  BigRat parse_rational() {
    std::string tok = parse_digits();
    skip_ws();
    if (pos_ < s_.size() && peek() == '/') {
      // Lookahead: "a/b" only when a digit follows; "( n ) / ( d )" keeps
      // its '/' for the ratfunc level.
      size_t save = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && isdigit(peek())) {
        tok += "/" + parse_digits();
      } else {
        pos_ = save;
      }
    }
    return BigRat::from_string(tok);
  }

  long parse_integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    long v = std::stol(parse_digits());
    return neg ? -v : v;
  }

  std::string parse_digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && isdigit(s_[pos_])) ++pos_;
    if (pos_ == start) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("RatFunc parse error at position " +
                     std::to_string(pos_) + ": " + why + " in '" + s_ + "'");
  }

  const std::string& s_;
  size_t pos_;
};

}  // namespace detail

inline RatFunc RatFunc::parse(const std::string& s) {
  return detail::RatFuncParser(s).parse();
}

inline RatFunc rf_parse(const std::string& s) { return RatFunc::parse(s); }
inline std::string rf_to_string(const RatFunc& f) { return f.str(); }

}  // namespace bdual

#endif  // BDUAL_RATFUNC_HPP
