#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpb/numkernel/number_field.hpp"
#include "lpb/numkernel/upoly.hpp"

namespace lpb {

/// Pairwise coprime squarefree monic parts with strictly increasing multiplicities.
/// Product of part^multiplicity equals the input up to a rational unit.
template <class T>
struct SquarefreeDecomposition {
  struct Part {
    UPoly<T> poly;
    int multiplicity;
  };
  std::vector<Part> parts;
};

/// Yun's algorithm. Throws InvalidInput on the zero polynomial.
template <class T>
SquarefreeDecomposition<T> squarefree_decompose(const UPoly<T>& a) {
  if (a.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition<T> out;
  if (a.is_constant()) return out;
  UPoly<T> da = a.derivative();
  UPoly<T> c = gcd(a, da);
  UPoly<T> w = exact_quotient(a, c);
  UPoly<T> y = exact_quotient(da, c);
  UPoly<T> z = y - w.derivative();
  int i = 1;
  while (!w.is_constant()) {
    UPoly<T> g = gcd(w, z);
    if (!g.is_constant()) out.parts.push_back({g, i});
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
    ++i;
  }
  return out;
}

/// Monic product of the distinct irreducible factors.
template <class T>
UPoly<T> squarefree_part(const UPoly<T>& a) {
  if (a.is_zero()) throw InvalidInput("squarefree part of the zero polynomial");
  if (a.is_constant()) return UPoly<T>(ring_constant<T>(1));
  return monic(exact_quotient(a, gcd(a, a.derivative())));
}

template <class T>
bool is_squarefree(const UPoly<T>& a) {
  return a.is_zero() ? false : gcd(a, a.derivative()).is_constant();
}

Poly poly_gcd(const Poly& a, const Poly& b);

/// Primitive integer polynomial with positive leading coefficient proportional to a.
std::vector<Integer> primitive_integer_coeffs(const Poly& a);
Poly from_integers(const std::vector<Integer>& coeffs);

/// All rational roots with multiplicity, ascending. Throws InvalidInput on zero.
std::vector<Rational> rational_roots(const Poly& a);

struct Factor {
  Poly poly;  // monic irreducible over Q
  int multiplicity;
};

/// Complete factorization over Q into monic irreducibles (Zassenhaus). Throws InvalidInput on zero.
/// Factors are sorted by degree, then coefficients.
std::vector<Factor> factor_over_Q(const Poly& a);

/// Human-readable polynomial in the given variable, e.g. "x^2 - 3/2*x + 1".
std::string format_poly(const Poly& p, std::string_view var = "x");
/// Number-field coefficients are printed as parenthesized polynomials in `field_var`.
std::string format_poly(const KPoly& p, std::string_view var = "x", std::string_view field_var = "z");
std::string format_nf(const NumberFieldElement& u, std::string_view field_var = "z");

}  // namespace lpb
