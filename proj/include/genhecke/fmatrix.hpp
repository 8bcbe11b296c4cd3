#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genhecke/finite_field.hpp"

namespace genhecke {

// Dense matrix over a small finite field.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(const GaloisField& f, int rows, int cols)
      : f_(&f), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}
  static FMatrix identity(const GaloisField& f, int n) {
    FMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static FMatrix from_rows(const GaloisField& f, const std::vector<std::vector<FieldElem>>& rows) {
    int r = static_cast<int>(rows.size()), c = r ? static_cast<int>(rows[0].size()) : 0;
    FMatrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) fail(ErrorKind::ValidationError, "ragged matrix");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const GaloisField& field() const { return *f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  FieldElem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const FieldElem& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  FMatrix operator*(const FMatrix& o) const {
    if (c_ != o.r_) fail(ErrorKind::ValidationError, "matrix size mismatch");
    FMatrix m(*f_, r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const FieldElem& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }
  FMatrix operator+(const FMatrix& o) const {
    same_shape(o);
    FMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }
  FMatrix operator-(const FMatrix& o) const {
    same_shape(o);
    FMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }
  FMatrix scaled(const FieldElem& s) const {
    FMatrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
  }
  bool operator==(const FMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const FMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  // Returns the scalar if the matrix is a multiple of the identity.
  std::optional<FieldElem> scalar_value() const {
    if (r_ != c_ || r_ == 0) return std::nullopt;
    FieldElem s = (*this)(0, 0);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if ((*this)(i, j) != (i == j ? s : f_->zero())) return std::nullopt;
    return s;
  }
  FieldElem trace() const {
    FieldElem t = f_->zero();
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
  }

  // Row echelon form; returns pivot columns.
  std::vector<int> echelon(FMatrix* out) const {
    FMatrix m = *this;
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = row;
      while (p < r_ && m(p, col).is_zero()) ++p;
      if (p == r_) continue;
      for (int j = 0; j < c_; ++j) std::swap(m(p, j), m(row, j));
      FieldElem inv = m(row, col).inverse();
      for (int j = 0; j < c_; ++j) m(row, j) *= inv;
      for (int i = 0; i < r_; ++i) {
        if (i == row || m(i, col).is_zero()) continue;
        FieldElem f = m(i, col);
        for (int j = 0; j < c_; ++j) m(i, j) -= f * m(row, j);
      }
      piv.push_back(col);
      ++row;
    }
    if (out) *out = m;
    return piv;
  }
  int rank() const { return static_cast<int>(echelon(nullptr).size()); }

  // Basis of {v : M v = 0}, as column vectors.
  std::vector<std::vector<FieldElem>> nullspace() const {
    FMatrix e;
    auto piv = echelon(&e);
    std::vector<bool> is_piv(c_, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int free = 0; free < c_; ++free) {
      if (is_piv[free]) continue;
      std::vector<FieldElem> v(c_, f_->zero());
      v[free] = f_->one();
      for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -e(static_cast<int>(k), free);
      basis.push_back(v);
    }
    return basis;
  }

  FieldElem det() const {
    if (r_ != c_) fail(ErrorKind::ValidationError, "determinant of non-square matrix");
    FMatrix m = *this;
    FieldElem d = f_->one();
    for (int col = 0; col < c_; ++col) {
      int p = col;
      while (p < r_ && m(p, col).is_zero()) ++p;
      if (p == r_) return f_->zero();
      if (p != col) {
        for (int j = 0; j < c_; ++j) std::swap(m(p, j), m(col, j));
        d = -d;
      }
      d *= m(col, col);
      FieldElem inv = m(col, col).inverse();
      for (int i = col + 1; i < r_; ++i) {
        if (m(i, col).is_zero()) continue;
        FieldElem f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }

  FMatrix inverse() const {
    if (r_ != c_) fail(ErrorKind::ValidationError, "inverse of non-square matrix");
    FMatrix aug(*f_, r_, 2 * c_);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = f_->one();
    }
    FMatrix e;
    auto piv = aug.echelon(&e);
    if (static_cast<int>(piv.size()) < r_ || piv[r_ - 1] >= c_) fail(ErrorKind::NotAUnit, "matrix is singular");
    FMatrix inv(*f_, r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) inv(i, j) = e(i, c_ + j);
    return inv;
  }

  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const {
    if (static_cast<int>(v.size()) != c_) fail(ErrorKind::ValidationError, "vector size mismatch");
    std::vector<FieldElem> out(r_, f_->zero());
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < r_; ++i) {
      out += i ? ", [" : "[";
      for (int j = 0; j < c_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
      out += "]";
    }
    return out + "]";
  }

 private:
  void same_shape(const FMatrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::ValidationError, "matrix size mismatch");
    if (f_ != o.f_) fail(ErrorKind::ParameterMismatch, "matrices over different fields");
  }
  const GaloisField* f_ = nullptr;
  int r_ = 0, c_ = 0;
  std::vector<FieldElem> a_;
};

}  // namespace genhecke
