#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpb/numkernel/rational.hpp"

namespace lpb {

/// Ring element from a small integer; every coefficient type is constructible from Rational.
template <class T>
T ring_constant(long n) {
  return T(Rational(n));
}

namespace detail {
// Unqualified call so ADL picks up is_zero overloads declared after this header.
template <class T>
bool coeff_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

/// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed on construction.
///
/// T is a commutative ring element type (Rational, NumberFieldElement, or UPoly<Rational> for
/// the bivariate case). Operations that divide by coefficients (divmod, gcd, ...) are free
/// functions and only instantiate for field coefficient types.
template <class T>
class UPoly {
 public:
  using coeff_type = T;

  UPoly() = default;
  explicit UPoly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }
  explicit UPoly(T constant) : c_{std::move(constant)} { trim(); }

  static UPoly monomial(T coefficient, std::size_t degree) {
    std::vector<T> c(degree + 1, T());
    c[degree] = std::move(coefficient);
    return UPoly(std::move(c));
  }
  static UPoly variable() { return monomial(ring_constant<T>(1), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
  /// Leading coefficient; zero for the zero polynomial.
  T lc() const { return c_.empty() ? T() : c_.back(); }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(UPoly a, const T& s) {
    for (auto& c : a.c_) c = c * s;
    a.trim();
    return a;
  }
  friend UPoly operator*(const T& s, UPoly a) { return std::move(a) * s; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<T> r(c_.size() - 1, T());
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * ring_constant<T>(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  /// Horner evaluation in any ring U that accepts T coefficients.
  template <class U>
  U evaluate(const U& at) const {
    U acc = U();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + U(c_[i]);
    return acc;
  }

  /// Coefficient-wise image in another ring.
  template <class U, class F>
  UPoly<U> map(F&& fn) const {
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(fn(c));
    return UPoly<U>(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p) {
  return p.is_zero();
}

using Poly = UPoly<Rational>;

template <class T>
UPoly<T> pow(UPoly<T> base, unsigned exponent) {
  UPoly<T> result(ring_constant<T>(1));
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Field-coefficient algorithms.

/// Quotient and remainder; throws DivisionByZero when b is zero.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<T>(), a};
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  const T inv_lc = ring_constant<T>(1) / b.lc();
  std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T());
  for (int i = a.degree(); i >= db; --i) {
    T q = rem[static_cast<std::size_t>(i)] * inv_lc;
    if (detail::coeff_is_zero(q)) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = slot - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db), T());
  return {UPoly<T>(std::move(quot)), UPoly<T>(std::move(rem))};
}

template <class T>
UPoly<T> operator%(const UPoly<T>& a, const UPoly<T>& b) {
  return divmod(a, b).second;
}

/// a / b; throws InvalidInput if b does not divide a.
template <class T>
UPoly<T> exact_quotient(const UPoly<T>& a, const UPoly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidInput("inexact polynomial division");
  return q;
}

template <class T>
UPoly<T> monic(const UPoly<T>& a) {
  if (a.is_zero()) return a;
  return a * (ring_constant<T>(1) / a.lc());
}

/// Monic gcd by the Euclidean algorithm; throws InvalidInput when both inputs are zero.
template <class T>
UPoly<T> euclid_gcd(UPoly<T> a, UPoly<T> b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  while (!b.is_zero()) {
    UPoly<T> r = a % b;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// Monic gcd; throws InvalidInput when both inputs are zero.
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  return euclid_gcd(std::move(a), std::move(b));
}

/// Over Q the gcd is computed modulo small primes.
template <>
UPoly<Rational> gcd(UPoly<Rational> a, UPoly<Rational> b);

template <class T>
struct Bezout {
  UPoly<T> g;  // monic gcd
  UPoly<T> s;
  UPoly<T> t;  // s*a + t*b == g
};

template <class T>
Bezout<T> extended_gcd(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  UPoly<T> r0 = a, r1 = b;
  UPoly<T> s0(ring_constant<T>(1)), s1;
  UPoly<T> t0, t1(ring_constant<T>(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<T> s2 = s0 - q * s1;
    UPoly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const T inv = ring_constant<T>(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Solves s*a + t*b == c with deg s < deg b, given gcd(a, b) | c.
template <class T>
std::pair<UPoly<T>, UPoly<T>> solve_bezout(const UPoly<T>& a, const UPoly<T>& b, const UPoly<T>& c) {
  Bezout<T> e = extended_gcd(a, b);
  auto [cq, cr] = divmod(c, e.g);
  if (!cr.is_zero()) throw InvalidInput("right-hand side not divisible by gcd");
  UPoly<T> s = e.s * cq;
  UPoly<T> t = e.t * cq;
  if (!b.is_constant()) {
    auto [q, r] = divmod(s, b);
    s = std::move(r);
    t = t + q * a;
  } else {
    t = t + exact_quotient(s * a, b);
    s = UPoly<T>();
  }
  return {s, t};
}

// ---------------------------------------------------------------------------
// Integral-domain algorithms.

/// lc(b)^(deg a - deg b + 1) * a = q*b + r; returns r.
template <class T>
UPoly<T> pseudo_remainder(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  UPoly<T> r = a;
  int e = a.degree() - b.degree() + 1;
  const UPoly<T> lb(b.lc());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    UPoly<T> s = UPoly<T>::monomial(r.lc(), static_cast<std::size_t>(r.degree() - b.degree()));
    r = lb * r - s * b;
    --e;
  }
  return r * pow(lb, static_cast<unsigned>(e)).lc();
}

}  // namespace lpb
