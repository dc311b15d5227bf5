#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hypercert/errors.hpp"
#include "hypercert/mpoly.hpp"
#include "hypercert/mpoly_gcd.hpp"

namespace hypercert::poly {

/// Rational function in canonical form: gcd(num, den) a unit, den
/// integer-primitive with positive leading coefficient, zero is 0/1.
/// Because the form is canonical, structural equality coincides with
/// cross-multiplication equality.
class RatFunc {
 public:
  RatFunc() : num_(MPoly::constant(0)), den_(MPoly::constant(1)) {}

  RatFunc(const MPoly& num, const MPoly& den) { assign(num, den); }

  /* implicit */ RatFunc(const MPoly& p) : num_(p), den_(MPoly::constant(1, p.vars())) {
    normalize_scalar();
  }

  static RatFunc constant(const Rat& c) { return RatFunc(MPoly::constant(c)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  bool is_polynomial() const { return den_.is_constant(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Cross-multiplication equality; agrees with == on canonical forms and is
  /// kept as an independent check for tests.
  friend bool equal_cross(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  MPoly num_, den_;

  void assign(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw Error("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = MPoly::zero(MPoly::merge_vars(num.vars(), den.vars()));
      den_ = MPoly::constant(1, num_.vars());
      return;
    }
    MPoly g = gcd_mpoly(num, den);
    auto qn = num.exact_quotient_by(g), qd = den.exact_quotient_by(g);
    require_internal(qn.has_value() && qd.has_value(), "RatFunc: gcd does not divide");
    num_ = *qn;
    den_ = *qd;
    normalize_scalar();
  }

  // Make den integer-primitive with positive leading coefficient.
  void normalize_scalar() {
    if (den_.is_zero()) throw Error("rational function with zero denominator");
    IntNormalized n = int_normalize(den_);
    den_ = n.primitive;
    num_ = num_ * (Rat(1) / n.scale);
  }
};

}  // namespace hypercert::poly
