#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "genhecke/errors.hpp"
#include "genhecke/finite_field.hpp"
#include "genhecke/integer.hpp"

namespace genhecke {

namespace detail {

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
inline const std::vector<Integer>& cyclotomic_poly(int n) {
  static const auto table = [] {
    constexpr int kMax = 256;
    std::vector<std::vector<Integer>> t(kMax + 1);
    for (int m = 1; m <= kMax; ++m) {
      // x^m - 1 divided by every Phi_d, d | m, d < m
      std::vector<Integer> num(m + 1, 0);
      num[0] = -1;
      num[m] = 1;
      for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        const auto& den = t[d];
        int dd = static_cast<int>(den.size()) - 1;
        std::vector<Integer> quo(num.size() - dd, 0);
        for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
          Integer c = num[i];
          quo[i - dd] = c;
          for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
        num = quo;
      }
      t[m] = num;
    }
    return t;
  }();
  if (n < 1 || n >= static_cast<int>(table.size()))
    fail(ErrorKind::BoundExceeded, "cyclotomic index out of range");
  return table[n];
}

}  // namespace detail

// Element of Z[zeta_n][1/n] stored as numerator (power basis, length phi(n))
// over n^k with k minimal. n == 0 marks a plain integer not yet tied to any n;
// it binds to the n of the other operand on first mixed use.
class CycloLoc {
 public:
  CycloLoc() : num_{0} {}
  CycloLoc(int v) : num_{Integer(v)} {}  // NOLINT(google-explicit-constructor)
  CycloLoc(const Integer& v) : num_{v} {}  // NOLINT(google-explicit-constructor)

  static CycloLoc integer(const Integer& v, int n) { return CycloLoc(v).bound(n); }
  // zeta_n^j
  static CycloLoc zeta_pow(int n, long j) {
    check_n(n);
    CycloLoc r = CycloLoc(0).bound(n);
    std::vector<Integer> big(n, 0);
    big[((j % n) + n) % n] = 1;
    r.num_ = reduce(n, big);
    return r;
  }
  // numerator coefficients over n^k
  static CycloLoc from_parts(int n, std::vector<Integer> num, int k) {
    check_n(n);
    if (k < 0) fail(ErrorKind::ValidationError, "negative denominator exponent");
    CycloLoc r;
    r.n_ = n;
    r.num_ = reduce(n, num);
    r.k_ = k;
    r.normalize();
    return r;
  }

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Integer>& numerator() const { return num_; }
  bool is_bound() const { return n_ != 0; }
  bool is_zero() const {
    for (const auto& c : num_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_integer() const {
    if (k_) return false;
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (!num_[i].is_zero()) return false;
    return true;
  }

  CycloLoc bound(int n) const {
    check_n(n);
    if (n_ == n) return *this;
    if (n_ != 0) fail(ErrorKind::ParameterMismatch, "cyclotomic parameters differ");
    CycloLoc r;
    r.n_ = n;
    r.num_.assign(phi(n), 0);
    r.num_[0] = num_[0];
    return r;
  }

  CycloLoc operator+(const CycloLoc& o) const { return add(o, 1); }
  CycloLoc operator-(const CycloLoc& o) const { return add(o, -1); }
  CycloLoc operator-() const {
    CycloLoc r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }
  CycloLoc operator*(const CycloLoc& o) const {
    auto [a, b] = unify(*this, o);
    if (a.n_ == 0) return CycloLoc(a.num_[0] * b.num_[0]);
    std::vector<Integer> prod(a.num_.size() + b.num_.size() - 1, 0);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j) prod[i + j] += a.num_[i] * b.num_[j];
    }
    CycloLoc r;
    r.n_ = a.n_;
    r.num_ = reduce(a.n_, prod);
    r.k_ = a.k_ + b.k_;
    r.normalize();
    return r;
  }
  CycloLoc& operator+=(const CycloLoc& o) { return *this = *this + o; }
  CycloLoc& operator-=(const CycloLoc& o) { return *this = *this - o; }
  CycloLoc& operator*=(const CycloLoc& o) { return *this = *this * o; }

  bool operator==(const CycloLoc& o) const {
    if (n_ == o.n_) return k_ == o.k_ && num_ == o.num_;
    if (n_ && o.n_) return false;
    auto [a, b] = unify(*this, o);
    return a.k_ == b.k_ && a.num_ == b.num_;
  }
  bool operator!=(const CycloLoc& o) const { return !(*this == o); }

  // Norm down to Q, computed as the determinant of multiplication.
  Rational norm() const {
    if (n_ == 0) return Rational(num_[0]);
    auto m = mult_matrix();
    Rational det = det_rational(m);
    Rational den = Rational(ipow(Integer(n_), static_cast<unsigned>(k_ * phi(n_))));
    return det / den;
  }

  // Units of Z[zeta_n][1/n] are the elements whose norm only involves primes dividing n.
  bool is_unit() const {
    if (is_zero()) return false;
    Rational nm = norm();
    Integer a = abs(boost::multiprecision::numerator(nm));
    Integer b = boost::multiprecision::denominator(nm);
    Integer nn = n_ ? Integer(n_) : Integer(1);
    return only_primes_of(a, nn) && only_primes_of(b, nn);
  }

  CycloLoc inverse() const {
    if (!is_unit()) fail(ErrorKind::NotAUnit, str() + " is not a unit");
    if (n_ == 0) return *this;  // +-1
    int d = phi(n_);
    auto m = mult_matrix();
    // solve m v = e0
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) a[i][j] = Rational(m[i][j]);
      a[i][d] = i == 0 ? 1 : 0;
    }
    for (int c = 0; c < d; ++c) {
      int piv = c;
      while (a[piv][c].is_zero()) ++piv;
      std::swap(a[piv], a[c]);
      for (int r = 0; r < d; ++r) {
        if (r == c || a[r][c].is_zero()) continue;
        Rational f = a[r][c] / a[c][c];
        for (int j = c; j <= d; ++j) a[r][j] -= f * a[c][j];
      }
    }
    std::vector<Rational> v(d);
    for (int i = 0; i < d; ++i) v[i] = a[i][d] / a[i][i] * Rational(ipow(Integer(n_), k_));
    // smallest j with n^j v integral
    int j = 0;
    Integer scale = 1;
    for (;;) {
      bool ok = true;
      for (auto& x : v)
        if (boost::multiprecision::denominator(x * Rational(scale)) != 1) { ok = false; break; }
      if (ok) break;
      scale *= n_;
      ++j;
      if (j > 512) fail(ErrorKind::NotAUnit, "inverse denominator not a power of n");
    }
    std::vector<Integer> num(d);
    for (int i = 0; i < d; ++i) num[i] = boost::multiprecision::numerator(v[i] * Rational(scale));
    return from_parts(n_, num, j);
  }

  // Complex embedding zeta_n -> exp(2 pi i / n).
  std::complex<double> to_complex() const {
    if (n_ == 0) return {num_[0].convert_to<double>(), 0.0};
    const double pi = std::acos(-1.0);
    std::complex<double> z = std::polar(1.0, 2 * pi / n_), acc = 0, pw = 1;
    for (const auto& c : num_) {
      acc += c.convert_to<double>() * pw;
      pw *= z;
    }
    return acc / std::pow(static_cast<double>(n_), k_);
  }

  // Reduction to F_{q0} with zeta_n -> the fixed generator raised to (q0-1)/n.
  FieldElem reduce(const GaloisField& f) const {
    if (n_ == 0) return f.from_integer(num_[0]);
    int order = f.size() - 1;
    if (order % n_) fail(ErrorKind::ParameterMismatch, "field has no primitive n-th root of unity");
    if (Integer(n_) % f.p() == 0) fail(ErrorKind::NotAUnit, "n is not invertible in the field");
    FieldElem z = f.gen_pow(order / n_), acc = f.zero(), pw = f.one();
    for (const auto& c : num_) {
      acc += f.from_integer(c) * pw;
      pw *= z;
    }
    return acc / f.from_integer(n_).pow(k_);
  }

  // "3", "[1-2*zeta]", "[1+zeta]/4"
  std::string str() const {
    if (is_integer()) return num_[0].str();
    std::string body;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      const Integer& c = num_[i];
      if (c.is_zero()) continue;
      Integer a = abs(c);
      if (c.sign() < 0) body += "-";
      else if (!body.empty()) body += "+";
      if (i == 0) { body += a.str(); continue; }
      if (a != 1) body += a.str() + "*";
      body += "zeta";
      if (i > 1) body += "^" + std::to_string(i);
    }
    std::string out = "[" + body + "]";
    if (k_) out += "/" + ipow(Integer(n_), k_).str();
    return out;
  }

  // Parses the output of str(); n binds symbols zeta and the denominator.
  static CycloLoc parse(const std::string& raw, int n) {
    std::string s;
    for (char ch : raw)
      if (ch != ' ') s += ch;
    if (s.empty()) fail(ErrorKind::ParseError, "empty scalar");
    if (s[0] != '[') {
      Integer v = parse_integer(s);
      return n ? CycloLoc::integer(v, n) : CycloLoc(v);
    }
    if (n == 0) fail(ErrorKind::ParseError, "cyclotomic scalar needs q0");
    auto close = s.find(']');
    if (close == std::string::npos) fail(ErrorKind::ParseError, "missing ']' in '" + raw + "'");
    std::string body = s.substr(1, close - 1), tail = s.substr(close + 1);
    int k = 0;
    if (!tail.empty()) {
      if (tail[0] != '/') fail(ErrorKind::ParseError, "bad scalar '" + raw + "'");
      Integer den = parse_integer(tail.substr(1)), p = 1;
      while (p < den) { p *= n; ++k; if (n == 1) break; }
      if (p != den) fail(ErrorKind::ParseError, "denominator must be a power of " + std::to_string(n));
    }
    std::vector<Integer> big(1, 0);
    std::size_t i = 0;
    while (i < body.size()) {
      int sign = 1;
      if (body[i] == '+' || body[i] == '-') { sign = body[i] == '-' ? -1 : 1; ++i; }
      std::size_t j = i;
      while (j < body.size() && body[j] != '+' && body[j] != '-') ++j;
      std::string term = body.substr(i, j - i);
      if (term.empty()) fail(ErrorKind::ParseError, "bad scalar '" + raw + "'");
      Integer c = 1;
      std::size_t e = 0;
      auto star = term.find('*');
      std::string mono = term;
      if (star != std::string::npos) {
        c = parse_integer(term.substr(0, star));
        mono = term.substr(star + 1);
      } else if (term.rfind("zeta", 0) != 0) {
        c = parse_integer(term);
        mono.clear();
      }
      if (!mono.empty()) {
        if (mono.rfind("zeta", 0) != 0) fail(ErrorKind::ParseError, "bad scalar '" + raw + "'");
        e = 1;
        if (mono.size() > 4) {
          if (mono[4] != '^') fail(ErrorKind::ParseError, "bad scalar '" + raw + "'");
          e = std::stoul(mono.substr(5));
        }
      }
      if (big.size() <= e) big.resize(e + 1, 0);
      big[e] += sign * c;
      i = j;
    }
    return from_parts(n, big, k);
  }

  static int phi(int n) { return static_cast<int>(detail::cyclotomic_poly(n).size()) - 1; }

 private:
  static void check_n(int n) {
    if (n < 1) fail(ErrorKind::ValidationError, "cyclotomic parameter must be >= 1");
  }
  static bool only_primes_of(Integer a, const Integer& n) {
    for (;;) {
      Integer g = gcd(a, n);
      if (g == 1) break;
      while (a % g == 0) a /= g;
    }
    return a == 1;
  }
  static std::vector<Integer> reduce(int n, std::vector<Integer> c) {
    const auto& phi_n = detail::cyclotomic_poly(n);
    int d = static_cast<int>(phi_n.size()) - 1;
    for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
      if (c[i].is_zero()) continue;
      Integer t = c[i];
      for (int j = 0; j <= d; ++j) c[i - d + j] -= t * phi_n[j];
    }
    c.resize(d, 0);
    return c;
  }
  static std::pair<CycloLoc, CycloLoc> unify(const CycloLoc& a, const CycloLoc& b) {
    if (a.n_ == b.n_) return {a, b};
    if (a.n_ == 0) return {a.bound(b.n_), b};
    if (b.n_ == 0) return {a, b.bound(a.n_)};
    fail(ErrorKind::ParameterMismatch,
         "cyclotomic parameters differ: " + std::to_string(a.n_) + " vs " + std::to_string(b.n_));
  }
  CycloLoc add(const CycloLoc& o, int sign) const {
    auto [a, b] = unify(*this, o);
    if (a.n_ == 0) return CycloLoc(a.num_[0] + sign * b.num_[0]);
    int k = std::max(a.k_, b.k_);
    Integer fa = ipow(Integer(a.n_), k - a.k_), fb = ipow(Integer(a.n_), k - b.k_);
    CycloLoc r;
    r.n_ = a.n_;
    r.k_ = k;
    r.num_.resize(a.num_.size());
    for (std::size_t i = 0; i < a.num_.size(); ++i) r.num_[i] = a.num_[i] * fa + sign * b.num_[i] * fb;
    r.normalize();
    return r;
  }
  void normalize() {
    if (n_ == 0) return;
    if (is_zero()) { k_ = 0; return; }
    if (n_ == 1) { k_ = 0; return; }
    while (k_ > 0) {
      bool div = true;
      for (const auto& c : num_)
        if (c % n_ != 0) { div = false; break; }
      if (!div) break;
      for (auto& c : num_) c /= n_;
      --k_;
    }
  }
  std::vector<std::vector<Integer>> mult_matrix() const {
    int d = phi(n_);
    std::vector<std::vector<Integer>> m(d, std::vector<Integer>(d, 0));
    for (int j = 0; j < d; ++j) {
      std::vector<Integer> shifted(d + j, 0);
      for (int i = 0; i < d; ++i) shifted[i + j] = num_[i];
      auto col = reduce(n_, shifted);
      for (int i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
  }
  static Rational det_rational(const std::vector<std::vector<Integer>>& m) {
    int d = static_cast<int>(m.size());
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a[i][j] = Rational(m[i][j]);
    Rational det = 1;
    for (int c = 0; c < d; ++c) {
      int piv = c;
      while (piv < d && a[piv][c].is_zero()) ++piv;
      if (piv == d) return 0;
      if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
      det *= a[c][c];
      for (int r = c + 1; r < d; ++r) {
        if (a[r][c].is_zero()) continue;
        Rational f = a[r][c] / a[c][c];
        for (int j = c; j < d; ++j) a[r][j] -= f * a[c][j];
      }
    }
    return det;
  }

  int n_ = 0;
  std::vector<Integer> num_;
  int k_ = 0;
};

inline bool scalar_is_zero(const CycloLoc& a) { return a.is_zero(); }
inline std::string scalar_str(const CycloLoc& a) { return a.str(); }
inline bool scalar_is_negative(const CycloLoc& a) { return a.is_integer() && a.numerator()[0].sign() < 0; }
inline bool scalar_is_atomic(const CycloLoc&) { return true; }

}  // namespace genhecke
