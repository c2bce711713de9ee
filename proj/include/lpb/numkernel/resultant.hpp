#pragma once

#include "lpb/numkernel/upoly.hpp"

namespace lpb {

/// Polynomial in x with coefficients in Q[z].
using BiPoly = UPoly<Poly>;

inline Rational exact_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw DivisionByZero("exact division by zero");
  return a / b;
}

inline Poly exact_div(const Poly& a, const Poly& b) { return exact_quotient(a, b); }

namespace detail {

template <class R>
R ring_pow(const R& base, int exponent) {
  R result = ring_constant<R>(1);
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

}  // namespace detail

/// Resultant over an integral domain R by the subresultant PRS.
///
/// Equals the Sylvester determinant, Res(a, b) = lc(a)^deg(b) * prod b(alpha) over roots of a.
/// Throws InvalidInput when either input is zero.
template <class R>
R subresultant_resultant(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero() || b.is_zero()) throw InvalidInput("resultant of a zero polynomial");
  R sign = ring_constant<R>(1);
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * detail::ring_pow(b.lc(), a.degree());

  R g = ring_constant<R>(1);
  R h = ring_constant<R>(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    UPoly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return R();
    a = std::move(b);
    const R divisor = g * detail::ring_pow(h, delta);
    std::vector<R> reduced;
    reduced.reserve(r.coeffs().size());
    for (const auto& c : r.coeffs()) reduced.push_back(exact_div(c, divisor));
    b = UPoly<R>(std::move(reduced));
    g = a.lc();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_div(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1));
    }
    if (b.degree() == 0) {
      const int da = a.degree();
      R last = exact_div(detail::ring_pow(b.lc(), da), detail::ring_pow(h, da - 1));
      return sign * last;
    }
  }
}

/// Res(a, b) over Q; throws InvalidInput when either input is zero.
Rational resultant(const Poly& a, const Poly& b);

/// Res_x(a, b) for a, b in Q[z][x]; result in Q[z].
Poly resultant(const BiPoly& a, const BiPoly& b);

/// Lifts p(x) to Q[z][x] with z-constant coefficients.
BiPoly constant_in_z(const Poly& p);

}  // namespace lpb
