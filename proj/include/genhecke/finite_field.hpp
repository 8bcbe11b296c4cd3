#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "genhecke/errors.hpp"
#include "genhecke/integer.hpp"

namespace genhecke {

class GaloisField;

// Element of a small finite field. Value is the index sum c_i p^i of the
// coordinate vector in the power basis of the defining polynomial.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const GaloisField* f, int v) : f_(f), v_(v) {}

  const GaloisField& field() const { return *f_; }
  const GaloisField* field_ptr() const { return f_; }
  int index() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem inverse() const;
  FieldElem pow(long e) const;

  bool operator==(const FieldElem& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  bool operator<(const FieldElem& o) const { return v_ < o.v_; }

  std::string str() const;

 private:
  void check(const FieldElem& o) const {
    if (f_ != o.f_) fail(ErrorKind::ParameterMismatch, "field elements from different fields");
  }
  const GaloisField* f_ = nullptr;
  int v_ = 0;
};

// F_{p^d} for p^d <= 64, presented by a Conway polynomial (prime fields use
// the least primitive root as generator).
class GaloisField {
 public:
  static constexpr int kMaxSize = 64;

  int p() const { return p_; }
  int degree() const { return d_; }
  int size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  // Fixed generator of the multiplicative group.
  FieldElem generator() const { return {this, exp_[1]}; }
  FieldElem element(int index) const {
    if (index < 0 || index >= size_) fail(ErrorKind::ValidationError, "field index out of range");
    return {this, index};
  }
  FieldElem from_integer(const Integer& a) const {
    Integer r = a % p_;
    if (r < 0) r += p_;
    return {this, r.convert_to<int>()};
  }
  FieldElem gen_pow(long e) const {
    long m = size_ - 1;
    long r = ((e % m) + m) % m;
    return {this, exp_[r]};
  }
  std::vector<FieldElem> elements() const {
    std::vector<FieldElem> out;
    for (int i = 0; i < size_; ++i) out.emplace_back(this, i);
    return out;
  }
  std::string name() const { return "F" + std::to_string(size_); }

  // Parses "3", "-1", "g^5", "a", "2*a^2+a+1". Integers reduce mod p.
  FieldElem parse(const std::string& text) const;

  static const GaloisField& get(int size);
  static const GaloisField& get(int q0, int m);
  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int i = 2; i * i <= n; ++i)
      if (n % i == 0) return false;
    return true;
  }
  // Returns p if n = p^e with e >= 1, else 0.
  static int prime_of_power(int n) {
    if (n < 2) return 0;
    int p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }

  GaloisField(int p, int d, std::vector<int> modulus);

 private:
  friend class FieldElem;
  int add_idx(int a, int b) const { return add_[a * size_ + b]; }
  std::vector<int> digits(int v) const {
    std::vector<int> c(d_);
    for (int i = 0; i < d_; ++i) { c[i] = v % p_; v /= p_; }
    return c;
  }
  int undigits(const std::vector<int>& c) const {
    int v = 0;
    for (int i = d_ - 1; i >= 0; --i) v = v * p_ + c[i];
    return v;
  }

  int p_, d_, size_;
  std::vector<int> modulus_;  // monic, low degree first, length d+1
  std::vector<int> exp_, log_, add_, neg_;
};

inline GaloisField::GaloisField(int p, int d, std::vector<int> modulus)
    : p_(p), d_(d), size_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < d; ++i) size_ *= p;
  add_.resize(size_ * size_);
  neg_.resize(size_);
  for (int a = 0; a < size_; ++a) {
    auto ca = digits(a);
    std::vector<int> cn(d_);
    for (int i = 0; i < d_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = undigits(cn);
    for (int b = 0; b < size_; ++b) {
      auto cb = digits(b);
      std::vector<int> c(d_);
      for (int i = 0; i < d_; ++i) c[i] = (ca[i] + cb[i]) % p_;
      add_[a * size_ + b] = undigits(c);
    }
  }
  exp_.assign(size_ - 1, 0);
  log_.assign(size_, -1);
  if (d_ == 1) {
    int g = 0;
    for (int c = 1; c < p_ && !g; ++c) {
      int x = 1, ord = 0;
      do { x = x * c % p_; ++ord; } while (x != 1);
      if (ord == p_ - 1) g = c;
    }
    int x = 1;
    for (int i = 0; i < size_ - 1; ++i) { exp_[i] = x; x = x * g % p_; }
  } else {
    std::vector<int> c(d_, 0);
    c[0] = 1;
    for (int i = 0; i < size_ - 1; ++i) {
      exp_[i] = undigits(c);
      // multiply by the root a
      int top = c[d_ - 1];
      for (int j = d_ - 1; j > 0; --j) c[j] = c[j - 1];
      c[0] = 0;
      for (int j = 0; j < d_; ++j) c[j] = ((c[j] - top * modulus_[j]) % p_ + p_) % p_;
    }
  }
  for (int i = 0; i < size_ - 1; ++i) {
    if (log_[exp_[i]] != -1) fail(ErrorKind::ValidationError, "defining polynomial is not primitive");
    log_[exp_[i]] = i;
  }
}

inline const GaloisField& GaloisField::get(int size) {
  if (size > kMaxSize) fail(ErrorKind::FieldTooLarge, "field of size " + std::to_string(size) + " exceeds 64");
  int p = prime_of_power(size);
  if (!p) fail(ErrorKind::ValidationError, std::to_string(size) + " is not a prime power");
  static const auto table = [] {
    // Conway polynomials, coefficients low degree first.
    const std::map<int, std::vector<int>> conway = {
        {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},    {16, {1, 1, 0, 0, 1}},
        {32, {1, 0, 1, 0, 0, 1}}, {64, {1, 1, 0, 1, 1, 0, 1}},
        {9, {2, 2, 1}},          {27, {1, 2, 0, 1}},   {25, {2, 4, 1}},
        {49, {3, 6, 1}},
    };
    std::map<int, std::unique_ptr<GaloisField>> t;
    for (int n = 2; n <= kMaxSize; ++n) {
      int pp = prime_of_power(n);
      if (!pp) continue;
      if (pp == n) {
        t.emplace(n, std::make_unique<GaloisField>(n, 1, std::vector<int>{0, 1}));
      } else {
        int d = 0;
        for (int m = n; m > 1; m /= pp) ++d;
        t.emplace(n, std::make_unique<GaloisField>(pp, d, conway.at(n)));
      }
    }
    return t;
  }();
  return *table.at(size);
}

inline const GaloisField& GaloisField::get(int q0, int m) {
  if (q0 < 2 || m < 1) fail(ErrorKind::ValidationError, "need q0 >= 2 and m >= 1");
  long s = 1;
  for (int i = 0; i < m; ++i) {
    s *= q0;
    if (s > kMaxSize)
      fail(ErrorKind::FieldTooLarge, "q0^m = " + std::to_string(q0) + "^" + std::to_string(m) + " exceeds 64");
  }
  if (!prime_of_power(q0)) fail(ErrorKind::ValidationError, std::to_string(q0) + " is not a prime power");
  return get(static_cast<int>(s));
}

inline bool FieldElem::is_one() const { return v_ == 1; }

inline FieldElem FieldElem::operator+(const FieldElem& o) const {
  check(o);
  return {f_, f_->add_idx(v_, o.v_)};
}
inline FieldElem FieldElem::operator-() const { return {f_, f_->neg_[v_]}; }
inline FieldElem FieldElem::operator-(const FieldElem& o) const {
  check(o);
  return {f_, f_->add_idx(v_, f_->neg_[o.v_])};
}
inline FieldElem FieldElem::operator*(const FieldElem& o) const {
  check(o);
  if (v_ == 0 || o.v_ == 0) return {f_, 0};
  int m = f_->size_ - 1;
  return {f_, f_->exp_[(f_->log_[v_] + f_->log_[o.v_]) % m]};
}
inline FieldElem FieldElem::inverse() const {
  if (v_ == 0) fail(ErrorKind::NotAUnit, "zero has no inverse");
  int m = f_->size_ - 1;
  return {f_, f_->exp_[(m - f_->log_[v_]) % m]};
}
inline FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }
inline FieldElem FieldElem::pow(long e) const {
  if (v_ == 0) {
    if (e < 0) fail(ErrorKind::NotAUnit, "zero has no inverse");
    return {f_, e == 0 ? 1 : 0};
  }
  long m = f_->size_ - 1;
  long r = ((f_->log_[v_] * (e % m)) % m + m) % m;
  return {f_, f_->exp_[r]};
}

inline std::string FieldElem::str() const {
  if (!f_) return "0";
  if (f_->d_ == 1) return std::to_string(v_);
  auto c = f_->digits(v_);
  std::string out;
  for (int i = f_->d_ - 1; i >= 0; --i) {
    if (!c[i]) continue;
    if (!out.empty()) out += "+";
    if (i == 0) { out += std::to_string(c[i]); continue; }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline FieldElem GaloisField::parse(const std::string& raw) const {
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += ch;
  if (s.empty()) fail(ErrorKind::ParseError, "empty field element");
  if (s.rfind("g^", 0) == 0) return gen_pow(std::stol(s.substr(2)));
  if (s == "g") return generator();
  // sum of terms c, c*a^k, a^k with optional signs
  FieldElem acc = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') { sign = s[i] == '-' ? -1 : 1; ++i; }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) fail(ErrorKind::ParseError, "bad field element '" + raw + "'");
    Integer coeff = 1;
    int power = 0;
    auto star = term.find('*');
    std::string mono = term;
    if (star != std::string::npos) {
      coeff = parse_integer(term.substr(0, star));
      mono = term.substr(star + 1);
    } else if (term[0] != 'a') {
      coeff = parse_integer(term);
      mono.clear();
    }
    if (!mono.empty()) {
      if (mono[0] != 'a') fail(ErrorKind::ParseError, "bad field element '" + raw + "'");
      power = 1;
      if (mono.size() > 1) {
        if (mono[1] != '^') fail(ErrorKind::ParseError, "bad field element '" + raw + "'");
        power = std::stoi(mono.substr(2));
      }
    }
    FieldElem root = d_ == 1 ? zero() : element(p_);
    if (d_ == 1 && power > 0) fail(ErrorKind::ParseError, "prime field has no symbol 'a'");
    FieldElem t = from_integer(coeff * sign) * (power ? root.pow(power) : one());
    acc += t;
    i = j;
  }
  return acc;
}

}  // namespace genhecke
