#pragma once

#include <string>
#include <string_view>

#include "lpb/numkernel/number_field.hpp"
#include "lpb/numkernel/poly.hpp"

namespace lpb {

/// Reduced fraction num/den over a coefficient field: gcd(num, den) = 1, den monic,
/// zero is 0/1.
template <class T>
class RatFunc {
 public:
  RatFunc() : den_(ring_constant<T>(1)) {}
  explicit RatFunc(UPoly<T> p) : num_(std::move(p)), den_(ring_constant<T>(1)) {}
  /// Throws InvalidInput when den is zero.
  RatFunc(UPoly<T> num, UPoly<T> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc constant(const T& c) { return RatFunc(UPoly<T>(c)); }
  static RatFunc variable() { return RatFunc(UPoly<T>::variable()); }

  const UPoly<T>& num() const { return num_; }
  const UPoly<T>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_proper() const { return num_.degree() < den_.degree(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  /// Throws DivisionByZero when b is the zero function.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Quotient rule, normalized.
  RatFunc derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  template <class U>
  U evaluate(const U& at) const {
    return num_.evaluate(at) / den_.evaluate(at);
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = UPoly<T>(ring_constant<T>(1));
      return;
    }
    UPoly<T> g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    const T inv = ring_constant<T>(1) / den_.lc();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }

  UPoly<T> num_;
  UPoly<T> den_;
};

using RationalFunction = RatFunc<Rational>;
using KRationalFunction = RatFunc<NumberFieldElement>;

/// Throws InvalidInput when denQ is zero.
RationalFunction rf_normalize(const Poly& numP, const Poly& denQ);
RationalFunction rf_derivative(const RationalFunction& r);
/// r'/r; throws DivisionByZero on the zero function.
RationalFunction log_derivative(const RationalFunction& r);

/// x^n for any integer n.
RationalFunction rf_power(const RationalFunction& r, long exponent);

KRationalFunction to_krf(const RationalFunction& r);

/// "P" when den = 1, else "(P)/(Q)".
std::string format_rf(const RationalFunction& r, std::string_view var = "x");
std::string format_rf(const KRationalFunction& r, std::string_view var = "x", std::string_view field_var = "z");

}  // namespace lpb
