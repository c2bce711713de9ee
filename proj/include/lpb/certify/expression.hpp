#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "lpb/numkernel/number_field.hpp"
#include "lpb/numkernel/poly.hpp"

namespace lpb {

enum class Generator { X, Y, T, Gamma1, Gamma2 };

/// y^y * t^t * gamma1^g1 * gamma2^g2; t never has a negative exponent.
struct Monomial {
  int y = 0;
  int t = 0;
  int g1 = 0;
  int g2 = 0;
  auto operator<=>(const Monomial&) const = default;
  bool is_one() const { return y == 0 && t == 0 && g1 == 0 && g2 == 0; }
};

/// sum_m c_m(x) * m / den(x), with gcd(den, all c_m) = 1 and den monic. This form is
/// canonical, so equality is exact.
class ExtendedExpression {
 public:
  ExtendedExpression() : den_(NumberFieldElement(Rational(1))) {}
  ExtendedExpression(const KPoly& num, const KPoly& den, Monomial m = {});
  static ExtendedExpression constant(const NumberFieldElement& c);
  static ExtendedExpression generator(Generator g);
  static ExtendedExpression from_poly(const Poly& p);
  static ExtendedExpression from_fraction(const Poly& num, const Poly& den);

  const std::map<Monomial, KPoly>& terms() const { return terms_; }
  const KPoly& den() const { return den_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }
  bool mentions(Generator g) const;

  friend ExtendedExpression operator+(const ExtendedExpression& a, const ExtendedExpression& b);
  friend ExtendedExpression operator-(const ExtendedExpression& a, const ExtendedExpression& b);
  friend ExtendedExpression operator*(const ExtendedExpression& a, const ExtendedExpression& b);
  /// Only single-term divisors without t are supported; others throw InvalidInput.
  /// Dividing by zero throws DivisionByZero.
  friend ExtendedExpression operator/(const ExtendedExpression& a, const ExtendedExpression& b);
  ExtendedExpression operator-() const;
  friend bool operator==(const ExtendedExpression& a, const ExtendedExpression& b);
  friend bool operator!=(const ExtendedExpression& a, const ExtendedExpression& b) { return !(a == b); }

  ExtendedExpression pow(long n) const;

  ExtendedExpression partial_x() const;
  ExtendedExpression partial_y() const;

  /// Evaluates with `coefficient` mapping exact constants into F.
  template <class F>
  F evaluate(const F& x, const F& y, const F& t, const F& g1, const F& g2,
             const std::function<F(const NumberFieldElement&)>& coefficient) const {
    auto horner = [&](const KPoly& p) {
      F acc = F(0);
      for (int i = p.degree(); i >= 0; --i) acc = acc * x + coefficient(p.coeff(static_cast<std::size_t>(i)));
      return acc;
    };
    auto ipow = [](F base, int e) {
      const bool inv = e < 0;
      unsigned n = static_cast<unsigned>(inv ? -e : e);
      F r = F(1);
      while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
      }
      return inv ? F(1) / r : r;
    };
    F sum = F(0);
    for (const auto& [m, c] : terms_) sum = sum + horner(c) * ipow(y, m.y) * ipow(t, m.t) * ipow(g1, m.g1) * ipow(g2, m.g2);
    return sum / horner(den_);
  }

  /// Parseable text, variables x, y, t, gamma1, gamma2 and field generator z.
  std::string to_string() const;

 private:
  void normalize();
  std::map<Monomial, KPoly> terms_;
  KPoly den_;
};

/// x' = f(x), y' = x*y, t' = 1, gamma_i' = lambda_i * gamma_i.
struct ExtendedDerivation {
  Poly f_num;
  Poly f_den{Poly(Rational(1))};
  NumberFieldElement lambda1;
  NumberFieldElement lambda2;
};

ExtendedExpression lie_derivative(const ExtendedExpression& e, const ExtendedDerivation& der);

}  // namespace lpb
