#pragma once

#include "lpb/ratfield/rational_function.hpp"

namespace lpb {

/// r = poly_part + d/dx(rational_part) + log_numerator/log_denominator, with the last term
/// proper, reduced, and over a monic squarefree denominator.
struct HermiteForm {
  Poly poly_part;
  RationalFunction rational_part;
  Poly log_numerator;
  Poly log_denominator{Poly(Rational(1))};

  bool log_part_is_zero() const { return log_numerator.is_zero(); }
  RationalFunction log_part() const { return RationalFunction(log_numerator, log_denominator); }
};

/// Classical quadratic Hermite reduction.
HermiteForm hermite_reduce(const RationalFunction& r);

}  // namespace lpb
