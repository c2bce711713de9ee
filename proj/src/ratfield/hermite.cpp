#include "lpb/ratfield/hermite.hpp"

namespace lpb {

HermiteForm hermite_reduce(const RationalFunction& r) {
  HermiteForm out;
  auto [q, a] = divmod(r.num(), r.den());
  out.poly_part = q;
  if (a.is_zero()) return out;

  Poly d = r.den();
  const SquarefreeDecomposition<Rational> sqf = squarefree_decompose(d);
  for (const auto& [v, i] : sqf.parts) {
    if (i < 2 || v.is_constant()) continue;
    // d = u * v^i at this point; peel v one power at a time
    const Poly u = exact_quotient(d, pow(v, static_cast<unsigned>(i)));
    const Poly uv = u * v.derivative();
    for (int j = i - 1; j >= 1; --j) {
      const Rational inv_j = Rational(1) / Rational(j);
      auto [b, c] = solve_bezout(uv, v, a * Rational(-inv_j));
      out.rational_part = out.rational_part + RationalFunction(b, pow(v, static_cast<unsigned>(j)));
      a = c * Rational(-j) - u * b.derivative();
    }
    d = u * v;
  }

  auto [q2, rem] = divmod(a, d);
  out.poly_part = out.poly_part + q2;
  const RationalFunction log_part(rem, d);
  out.log_numerator = log_part.num();
  out.log_denominator = log_part.den();
  return out;
}

}  // namespace lpb
