#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genhecke/integer.hpp"

namespace genhecke {

// Joins (coefficient, monomial) pairs into "a*m1+b*m2-m3". An empty monomial
// string denotes the constant term.
template <class R>
std::string format_terms(const std::vector<std::pair<R, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, mono] : terms) {
    bool neg = scalar_is_negative(c);
    R a = neg ? R(-c) : c;
    std::string cs = scalar_str(a);
    if (!scalar_is_atomic(a)) cs = "(" + cs + ")";
    if (neg) out += out.empty() ? "-" : "-";
    else if (!out.empty()) out += "+";
    if (mono.empty()) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

inline std::string power_str(const char* var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

inline std::string join_monomial(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

// Polynomial in one variable with nonnegative exponents.
template <class R>
class GenPoly {
 public:
  GenPoly() = default;
  GenPoly(const R& c) { if (!scalar_is_zero(c)) t_[0] = c; }  // NOLINT(google-explicit-constructor)
  GenPoly(int c) : GenPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
  static GenPoly monomial(const R& c, int e) {
    GenPoly p;
    if (e < 0) fail(ErrorKind::ValidationError, "negative exponent in polynomial");
    if (!scalar_is_zero(c)) p.t_[e] = c;
    return p;
  }
  static GenPoly q() { return monomial(R(1), 1); }

  const std::map<int, R>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : t_.rbegin()->first; }
  R coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? R(0) : it->second;
  }
  void add_term(int e, const R& c) {
    if (scalar_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }

  GenPoly operator+(const GenPoly& o) const { GenPoly r = *this; r += o; return r; }
  GenPoly operator-(const GenPoly& o) const { GenPoly r = *this; r -= o; return r; }
  GenPoly operator-() const { GenPoly r; for (auto& [e, c] : t_) r.t_[e] = -c; return r; }
  GenPoly& operator+=(const GenPoly& o) { for (auto& [e, c] : o.t_) add_term(e, c); return *this; }
  GenPoly& operator-=(const GenPoly& o) { for (auto& [e, c] : o.t_) add_term(e, -c); return *this; }
  GenPoly operator*(const GenPoly& o) const {
    GenPoly r;
    for (auto& [e1, c1] : t_)
      for (auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  GenPoly& operator*=(const GenPoly& o) { return *this = *this * o; }
  GenPoly scaled(const R& s) const {
    GenPoly r;
    for (auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
  }
  GenPoly shifted(int k) const {
    GenPoly r;
    for (auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }
  bool operator==(const GenPoly& o) const { return t_ == o.t_; }
  bool operator!=(const GenPoly& o) const { return !(t_ == o.t_); }

  // Evaluates at x; conv maps coefficients into the target ring.
  template <class S, class Conv>
  S eval(const S& x, const S& one, Conv conv) const {
    S acc = one - one;
    for (auto& [e, c] : t_) {
      S p = one;
      for (int i = 0; i < e; ++i) p = p * x;
      acc = acc + conv(c) * p;
    }
    return acc;
  }

  std::string str(const char* var = "q") const {
    std::vector<std::pair<R, std::string>> terms;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) terms.emplace_back(it->second, power_str(var, it->first));
    return format_terms(terms);
  }

 private:
  std::map<int, R> t_;
};

// Laurent polynomial in z2 with coefficients in GenPoly<R>.
template <class R>
class LaurentPoly {
 public:
  const std::map<int, GenPoly<R>>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(int e, const GenPoly<R>& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : t_)
      for (auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

 private:
  std::map<int, GenPoly<R>> t_;
};

// Sparse polynomial in N variables (any variable may carry negative exponents).
template <class R, std::size_t N>
class MPoly {
 public:
  using Exp = std::array<int, N>;

  MPoly() = default;
  MPoly(const R& c) { if (!scalar_is_zero(c)) t_[Exp{}] = c; }  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(R(c)) {}  // NOLINT(google-explicit-constructor)
  static MPoly monomial(const R& c, const Exp& e) {
    MPoly p;
    if (!scalar_is_zero(c)) p.t_[e] = c;
    return p;
  }
  static MPoly var(std::size_t i, int e = 1) {
    Exp x{};
    x[i] = e;
    return monomial(R(1), x);
  }

  const std::map<Exp, R>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  R coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? R(0) : it->second;
  }
  void add_term(const Exp& e, const R& c) {
    if (scalar_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (scalar_is_zero(it->second)) t_.erase(it);
    }
  }
  MPoly operator+(const MPoly& o) const { MPoly r = *this; r += o; return r; }
  MPoly operator-(const MPoly& o) const { MPoly r = *this; r -= o; return r; }
  MPoly operator-() const { MPoly r; for (auto& [e, c] : t_) r.t_[e] = -c; return r; }
  MPoly& operator+=(const MPoly& o) { for (auto& [e, c] : o.t_) add_term(e, c); return *this; }
  MPoly& operator-=(const MPoly& o) { for (auto& [e, c] : o.t_) add_term(e, -c); return *this; }
  MPoly operator*(const MPoly& o) const {
    MPoly r;
    for (auto& [e1, c1] : t_)
      for (auto& [e2, c2] : o.t_) {
        Exp e;
        for (std::size_t i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly pow(unsigned k) const {
    MPoly r(R(1)), b = *this;
    while (k) {
      if (k & 1u) r *= b;
      b *= b;
      k >>= 1u;
    }
    return r;
  }
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(t_ == o.t_); }

  // Terms in descending exponent order.
  std::string str(const std::array<const char*, N>& names) const {
    std::vector<std::pair<R, std::string>> terms;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < N; ++i) parts.push_back(power_str(names[i], it->first[i]));
      terms.emplace_back(it->second, join_monomial(parts));
    }
    return format_terms(terms);
  }

 private:
  std::map<Exp, R> t_;
};

}  // namespace genhecke
