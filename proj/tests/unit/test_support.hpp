#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "lpb/numkernel/poly.hpp"

namespace lpb::testing {

/// Ascending integer coefficients.
inline Poly P(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Poly(std::move(c));
}

inline Rational Q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

inline Poly X() { return Poly::variable(); }

/// Random polynomial of exact degree `deg` with small rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, int deg, long max_num = 5, long max_den = 3) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
  for (int i = 0; i <= deg; ++i) c[static_cast<std::size_t>(i)] = make_rational(Integer(num(rng)), Integer(den(rng)));
  while (is_zero(c.back())) c.back() = make_rational(Integer(num(rng)), Integer(den(rng)));
  return Poly(std::move(c));
}

/// Determinant over Q by exact Gaussian elimination (test oracle).
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

/// Sylvester-matrix resultant (test oracle, independent of the subresultant PRS).
inline Rational sylvester_resultant(const Poly& a, const Poly& b) {
  const int m = a.degree();
  const int n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = a.coeff(static_cast<std::size_t>(i));
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = b.coeff(static_cast<std::size_t>(i));
  return determinant(std::move(s));
}

/// Solves m * x = rhs exactly; m must be square and nonsingular (test oracle).
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (is_zero(m[pivot][col])) ++pivot;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= factor * m[col][k];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

/// Product of (x - root).
inline Poly from_roots(const std::vector<Rational>& roots) {
  Poly p(Rational(1));
  for (const Rational& r : roots) p = p * Poly(std::vector<Rational>{-r, Rational(1)});
  return p;
}

/// Random monic irreducible over Q with small integer coefficients.
inline Poly random_irreducible(std::mt19937_64& rng, int deg, long max_coeff = 5) {
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  for (;;) {
    std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
    for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = Rational(coeff(rng));
    c.back() = 1;
    Poly p(std::move(c));
    auto fac = factor_over_Q(p);
    if (fac.size() == 1 && fac[0].multiplicity == 1) return p;
  }
}

}  // namespace lpb::testing
