#pragma once

#include <string>
#include <variant>

#include "genhecke/cyclotomic.hpp"
#include "genhecke/finite_field.hpp"
#include "genhecke/integer.hpp"

namespace genhecke {

// Runtime-tagged coefficient: integer, cyclotomic localization or finite field.
class CoefficientScalar {
 public:
  using Variant = std::variant<Integer, CycloLoc, FieldElem>;

  CoefficientScalar(Integer v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  CoefficientScalar(CycloLoc v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  CoefficientScalar(FieldElem v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  const Variant& value() const { return v_; }
  const char* kind() const {
    switch (v_.index()) {
      case 0: return "Integer";
      case 1: return "CycloLoc";
      default: return "FiniteField";
    }
  }

  CoefficientScalar operator+(const CoefficientScalar& o) const {
    return apply(o, [](const auto& a, const auto& b) { return a + b; });
  }
  CoefficientScalar operator-(const CoefficientScalar& o) const {
    return apply(o, [](const auto& a, const auto& b) { return a - b; });
  }
  CoefficientScalar operator*(const CoefficientScalar& o) const {
    return apply(o, [](const auto& a, const auto& b) { return a * b; });
  }
  bool operator==(const CoefficientScalar& o) const {
    if (v_.index() != o.v_.index()) fail(ErrorKind::VariantMismatch, std::string(kind()) + " vs " + o.kind());
    return v_ == o.v_;
  }
  CoefficientScalar inverse() const {
    if (auto* f = std::get_if<FieldElem>(&v_)) return f->inverse();
    if (auto* c = std::get_if<CycloLoc>(&v_)) return c->inverse();
    const Integer& a = std::get<Integer>(v_);
    if (a != 1 && a != -1) fail(ErrorKind::NotAUnit, a.str() + " is not a unit in Z");
    return a;
  }
  std::string str() const {
    return std::visit([](const auto& a) { return scalar_str_any(a); }, v_);
  }

 private:
  static std::string scalar_str_any(const Integer& a) { return a.str(); }
  static std::string scalar_str_any(const CycloLoc& a) { return a.str(); }
  static std::string scalar_str_any(const FieldElem& a) { return a.str(); }

  template <class F>
  CoefficientScalar apply(const CoefficientScalar& o, F f) const {
    if (v_.index() != o.v_.index()) fail(ErrorKind::VariantMismatch, std::string(kind()) + " vs " + o.kind());
    switch (v_.index()) {
      case 0: return CoefficientScalar(Integer(f(std::get<0>(v_), std::get<0>(o.v_))));
      case 1: return CoefficientScalar(CycloLoc(f(std::get<1>(v_), std::get<1>(o.v_))));
      default: return CoefficientScalar(FieldElem(f(std::get<2>(v_), std::get<2>(o.v_))));
    }
  }

  Variant v_;
};

}  // namespace genhecke
