#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "genhecke/cyclotomic.hpp"
#include "genhecke/errors.hpp"
#include "genhecke/poly.hpp"

namespace genhecke {

// Monomial X^m (m > 0), 1 (m == 0) or Y^-m (m < 0), times z2^z q^qe.
struct ThetaMono {
  int m = 0;
  int z = 0;
  int qe = 0;
  auto key() const { return std::tie(m, z, qe); }
  bool operator<(const ThetaMono& o) const { return key() < o.key(); }
  bool operator==(const ThetaMono& o) const { return key() == o.key(); }
  std::string str() const {
    std::string xy = m > 0 ? power_str("X", m) : power_str("Y", -m);
    return join_monomial({power_str("q", qe), xy, power_str("z2", z)});
  }
};

// Product of X^a, X^b etc. in normal form: the XY pairs become q*z2.
inline ThetaMono theta_mono_mul(const ThetaMono& a, const ThetaMono& b) {
  int m = a.m + b.m;
  int r = (std::abs(a.m) + std::abs(b.m) - std::abs(m)) / 2;
  return {m, a.z + b.z + r, a.qe + b.qe + r};
}

// Element of Z[q][z2^+-1][X,Y]/(XY - q z2) with coefficients in R, kept in
// the normal form sum c * q^j z2^k {X^n | 1 | Y^n}.
template <class R>
class ThetaElem {
 public:
  using Map = std::map<ThetaMono, R>;

  ThetaElem() = default;
  ThetaElem(const R& c) { if (!scalar_is_zero(c)) t_[ThetaMono{}] = c; }  // NOLINT(google-explicit-constructor)
  ThetaElem(int c) : ThetaElem(R(c)) {}  // NOLINT(google-explicit-constructor)

  static ThetaElem mono(const R& c, int m, int z = 0, int qe = 0) {
    if (qe < 0) fail(ErrorKind::ValidationError, "negative power of q");
    ThetaElem r;
    if (!scalar_is_zero(c)) r.t_[ThetaMono{m, z, qe}] = c;
    return r;
  }
  static ThetaElem X(int n = 1) { return mono(R(1), n); }
  static ThetaElem Y(int n = 1) { return mono(R(1), -n); }
  static ThetaElem z2(int k = 1) { return mono(R(1), 0, k); }
  static ThetaElem q(int j = 1) { return mono(R(1), 0, 0, j); }
  static ThetaElem z1() { return X() + Y(); }
  static ThetaElem from_poly(const GenPoly<R>& p) {
    ThetaElem r;
    for (auto& [e, c] : p.terms()) r.add_term({0, 0, e}, c);
    return r;
  }

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  void add_term(const ThetaMono& mo, const R& c) {
    if (scalar_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(mo, c);
    if (!fresh) {
      it->second += c;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }
  R coeff(const ThetaMono& mo) const {
    auto it = t_.find(mo);
    return it == t_.end() ? R(0) : it->second;
  }
  // Coefficient of X^m (or Y^-m) as a Laurent polynomial in z2 over Z[q].
  LaurentPoly<R> coefficient(int m) const {
    std::map<int, GenPoly<R>> acc;
    for (auto& [mo, c] : t_)
      if (mo.m == m) acc[mo.z].add_term(mo.qe, c);
    LaurentPoly<R> out;
    for (auto& [z, p] : acc) out.add_term(z, p);
    return out;
  }

  ThetaElem operator+(const ThetaElem& o) const { ThetaElem r = *this; r += o; return r; }
  ThetaElem operator-(const ThetaElem& o) const { ThetaElem r = *this; r -= o; return r; }
  ThetaElem operator-() const { ThetaElem r; for (auto& [mo, c] : t_) r.t_[mo] = -c; return r; }
  ThetaElem& operator+=(const ThetaElem& o) { for (auto& [mo, c] : o.t_) add_term(mo, c); return *this; }
  ThetaElem& operator-=(const ThetaElem& o) { for (auto& [mo, c] : o.t_) add_term(mo, -c); return *this; }
  ThetaElem operator*(const ThetaElem& o) const {
    ThetaElem r;
    for (auto& [m1, c1] : t_)
      for (auto& [m2, c2] : o.t_) r.add_term(theta_mono_mul(m1, m2), c1 * c2);
    return r;
  }
  ThetaElem& operator*=(const ThetaElem& o) { return *this = *this * o; }
  ThetaElem scaled(const R& s) const {
    ThetaElem r;
    for (auto& [mo, c] : t_) r.add_term(mo, c * s);
    return r;
  }
  ThetaElem pow(unsigned k) const {
    ThetaElem r(R(1)), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }
  bool operator==(const ThetaElem& o) const { return t_ == o.t_; }
  bool operator!=(const ThetaElem& o) const { return !(t_ == o.t_); }

  // The W0 involution X <-> Y.
  ThetaElem swapped() const {
    ThetaElem r;
    for (auto& [mo, c] : t_) r.t_[ThetaMono{-mo.m, mo.z, mo.qe}] = c;
    return r;
  }
  bool is_symmetric() const { return *this == swapped(); }

  // Substitutes a scalar for q; the result has no q-exponents but still
  // multiplies through the generic rule, so callers re-substitute after products.
  ThetaElem subst_q(const R& v) const {
    ThetaElem r;
    for (auto& [mo, c] : t_) {
      R f = c;
      for (int i = 0; i < mo.qe; ++i) f = f * v;
      r.add_term({mo.m, mo.z, 0}, f);
    }
    return r;
  }
  bool has_q() const {
    for (auto& [mo, c] : t_)
      if (mo.qe) return true;
    return false;
  }
  int max_abs_m() const {
    int r = 0;
    for (auto& [mo, c] : t_) r = std::max(r, std::abs(mo.m));
    return r;
  }

  // Value at (q, x, y, z2) with x*y == q*z2; conv maps coefficients into S.
  template <class S, class Conv>
  S evaluate(const S& qv, const S& x, const S& y, const S& z, Conv conv) const {
    if (!(x * y == qv * z)) fail(ErrorKind::PointOffFiber, "point does not satisfy x*y = q*z2");
    S one = conv(R(1));
    S zero = one - one;
    if (z == zero) {
      for (auto& [mo, c] : t_)
        if (mo.z < 0) fail(ErrorKind::InvalidPoint, "z2 = 0 but element has negative z2 powers");
    }
    auto pw = [&](S b, int e) {
      S r = one;
      for (int i = 0; i < e; ++i) r = r * b;
      return r;
    };
    S acc = zero;
    for (auto& [mo, c] : t_) {
      S v = conv(c) * pw(qv, mo.qe) * (mo.m >= 0 ? pw(x, mo.m) : pw(y, -mo.m));
      if (mo.z >= 0) v = v * pw(z, mo.z);
      else v = v / pw(z, -mo.z);
      acc = acc + v;
    }
    return acc;
  }

  std::string str() const {
    std::vector<std::pair<R, std::string>> terms;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) terms.emplace_back(it->second, it->first.str());
    return format_terms(terms);
  }

 private:
  Map t_;
};

template <class R>
ThetaElem<R> theta_swap(const ThetaElem<R>& a) {
  return a.swapped();
}

// Steinberg form of a symmetric element: polynomial in (z1, z2, q).
template <class R>
using SteinbergPoly = MPoly<R, 3>;

inline const std::array<const char*, 3>& steinberg_names() {
  static const std::array<const char*, 3> n{"z1", "z2", "q"};
  return n;
}

template <class R>
SteinbergPoly<R> to_steinberg(const ThetaElem<R>& a) {
  if (!a.is_symmetric()) fail(ErrorKind::NotInvariant, "element is not W0-invariant: " + a.str());
  std::vector<ThetaElem<R>> z1pow{ThetaElem<R>(R(1))};
  SteinbergPoly<R> out;
  ThetaElem<R> f = a;
  while (!f.is_zero()) {
    // highest X-power term
    auto it = std::prev(f.terms().end());
    ThetaMono mo = it->first;
    R c = it->second;
    if (mo.m < 0) fail(ErrorKind::NotInvariant, "element is not W0-invariant");
    while (static_cast<int>(z1pow.size()) <= mo.m) z1pow.push_back(z1pow.back() * ThetaElem<R>::z1());
    out.add_term({mo.m, mo.z, mo.qe}, c);
    f -= z1pow[mo.m] * ThetaElem<R>::mono(c, 0, mo.z, mo.qe);
  }
  return out;
}

template <class R>
ThetaElem<R> from_steinberg(const SteinbergPoly<R>& p) {
  ThetaElem<R> out;
  for (auto& [e, c] : p.terms()) {
    if (e[0] < 0 || e[2] < 0) fail(ErrorKind::ValidationError, "negative power of z1 or q");
    out += ThetaElem<R>::z1().pow(e[0]) * ThetaElem<R>::mono(c, 0, e[1], e[2]);
  }
  return out;
}

// Element of the fiber q = c: normal form over {X^n, 1, Y^n} z2^k with XY = c z2.
template <class R>
class FiberElem {
 public:
  using Key = std::pair<int, int>;  // (m, z)
  explicit FiberElem(R c) : c_(std::move(c)) {}
  static FiberElem from_theta(const ThetaElem<R>& a, const R& c) {
    FiberElem f(c);
    for (auto& [mo, v] : a.terms()) {
      R w = v;
      for (int i = 0; i < mo.qe; ++i) w = w * c;
      f.add_term({mo.m, mo.z}, w);
    }
    return f;
  }
  const R& fiber() const { return c_; }
  const std::map<Key, R>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Key& k, const R& v) {
    if (scalar_is_zero(v)) return;
    auto [it, fresh] = t_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }
  FiberElem operator+(const FiberElem& o) const {
    check(o);
    FiberElem r = *this;
    for (auto& [k, v] : o.t_) r.add_term(k, v);
    return r;
  }
  FiberElem operator-(const FiberElem& o) const {
    check(o);
    FiberElem r = *this;
    for (auto& [k, v] : o.t_) r.add_term(k, -v);
    return r;
  }
  FiberElem operator*(const FiberElem& o) const {
    check(o);
    FiberElem r(c_);
    for (auto& [k1, v1] : t_)
      for (auto& [k2, v2] : o.t_) {
        ThetaMono m = theta_mono_mul({k1.first, k1.second, 0}, {k2.first, k2.second, 0});
        R w = v1 * v2;
        for (int i = 0; i < m.qe; ++i) w = w * c_;
        r.add_term({m.m, m.z}, w);
      }
    return r;
  }
  bool operator==(const FiberElem& o) const { return c_ == o.c_ && t_ == o.t_; }
  bool operator!=(const FiberElem& o) const { return !(*this == o); }
  std::string str() const {
    std::vector<std::pair<R, std::string>> terms;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it)
      terms.emplace_back(it->second, ThetaMono{it->first.first, it->first.second, 0}.str());
    return format_terms(terms);
  }

 private:
  void check(const FiberElem& o) const {
    if (!(c_ == o.c_)) fail(ErrorKind::ParameterMismatch, "elements lie on different fibers");
  }
  R c_;
  std::map<Key, R> t_;
};

template <class R>
FiberElem<R> theta_specialize(const ThetaElem<R>& a, const R& q_value) {
  return FiberElem<R>::from_theta(a, q_value);
}

// Value at a point; requires x*y == q*z2.
template <class S, class R, class Conv>
S theta_evaluate(const ThetaElem<R>& a, const S& q, const S& x, const S& y, const S& z2, Conv conv) {
  return a.evaluate(q, x, y, z2, conv);
}

// ---- text grammar -------------------------------------------------------
// expr := ['+'|'-'] term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := integer | '[' cyclotomic ']' ['/' integer] | symbol ['^' int] | '(' expr ')' ['^' int]
// symbols: q z2 X Y z1; negative exponents only on z2.
template <class R>
class ThetaParser {
 public:
  using ScalarFn = std::function<R(const std::string&)>;
  ThetaParser(std::string text, ScalarFn scalar) : s_(std::move(text)), scalar_(std::move(scalar)) {}

  ThetaElem<R> parse() {
    ThetaElem<R> r = expr();
    skip();
    if (i_ != s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, what + " at position " + std::to_string(i_) + " in '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool eat(char ch) {
    skip();
    if (i_ < s_.size() && s_[i_] == ch) { ++i_; return true; }
    return false;
  }
  ThetaElem<R> expr() {
    ThetaElem<R> acc;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else if (!first) break;
      ThetaElem<R> t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
    }
    return acc;
  }
  ThetaElem<R> term() {
    ThetaElem<R> acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  int exponent(bool allow_negative) {
    if (!eat('^')) return 1;
    skip();
    std::size_t st = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string tok = s_.substr(st, i_ - st);
    if (tok.empty() || tok == "-" || tok == "+") error("expected exponent");
    int e = std::stoi(tok);
    if (e < 0 && !allow_negative) error("negative exponent only allowed on z2");
    return e;
  }
  ThetaElem<R> factor() {
    skip();
    if (i_ >= s_.size()) error("unexpected end");
    char ch = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return ThetaElem<R>(scalar_(s_.substr(st, i_ - st)));
    }
    if (ch == '[') {
      std::size_t st = i_;
      auto close = s_.find(']', i_);
      if (close == std::string::npos) error("missing ']'");
      i_ = close + 1;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      }
      return ThetaElem<R>(scalar_(s_.substr(st, i_ - st)));
    }
    if (ch == '(') {
      ++i_;
      ThetaElem<R> inner = expr();
      if (!eat(')')) error("missing ')'");
      int e = exponent(false);
      return inner.pow(static_cast<unsigned>(e));
    }
    std::size_t st = i_;
    while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string sym = s_.substr(st, i_ - st);
    if (sym == "z2") return ThetaElem<R>::z2(exponent(true));
    if (sym == "q") return ThetaElem<R>::q(exponent(false));
    if (sym == "X") return ThetaElem<R>::X(exponent(false));
    if (sym == "Y") return ThetaElem<R>::Y(exponent(false));
    if (sym == "z1") return ThetaElem<R>::z1().pow(static_cast<unsigned>(exponent(false)));
    i_ = st;
    error(sym.empty() ? "unexpected character" : "unknown symbol '" + sym + "'");
  }

  std::string s_;
  ScalarFn scalar_;
  std::size_t i_ = 0;
};

inline ThetaElem<Integer> parse_theta(const std::string& text) {
  return ThetaParser<Integer>(text, [](const std::string& t) {
           if (!t.empty() && t[0] == '[') fail(ErrorKind::ParseError, "cyclotomic scalar in integer context");
           return parse_integer(t);
         }).parse();
}

// n binds cyclotomic scalars (n = q0 - 1); n == 0 allows integers only.
inline ThetaElem<CycloLoc> parse_theta_cyclo(const std::string& text, int n) {
  return ThetaParser<CycloLoc>(text, [n](const std::string& t) { return CycloLoc::parse(t, n); }).parse();
}

template <class R>
ThetaElem<R> theta_cast(const ThetaElem<Integer>& a) {
  ThetaElem<R> r;
  for (auto& [mo, c] : a.terms()) r.add_term(mo, R(c));
  return r;
}

}  // namespace genhecke
