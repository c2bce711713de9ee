#pragma once

#include "lpb/certify/expression.hpp"
#include "lpb/criteria/criteria.hpp"

namespace lpb {

struct FirstIntegralPair {
  ExtendedExpression phi1;
  ExtendedExpression phi2;
  ExtendedDerivation derivation;
  bool uses_t = false;
  bool uses_gamma1 = false;
  bool uses_gamma2 = false;
};

struct Splitting {
  int k = 1;  // y^k = w1 * w2
  Rational e;
  ExtendedExpression w1;
  ExtendedExpression w2;
};

ExtendedExpression to_expression(const RationalFunction& r);
ExtendedExpression to_expression(const KRationalFunction& r);
ExtendedExpression to_expression(const std::vector<PowerFactor>& factors);
ExtendedExpression to_expression(const std::vector<RationalPowerFactor>& factors);

/// phi1 from condition (ii), phi2 from condition (iii); both Lie derivatives are checked to
/// vanish. Throws InvalidInput for a verdict that is not internal.
FirstIntegralPair build_first_integrals(const RationalFunction& f, const Verdict& v);

/// w1 = h(x), w2 = y^k/h(x). Throws InvalidInput unless y^k = w1*w2 and w2'/w2 = e.
Splitting build_splitting(const RationalFunction& f, const ConditionIII& c3);

/// Jacobian d(phi1, phi2)/d(x, y) is not identically zero.
bool verify_independence(const FirstIntegralPair& pair);
bool verify_independence(const ExtendedExpression& phi1, const ExtendedExpression& phi2);

// Identity checks by expression arithmetic alone; f, g, h are expressions in x.

/// 1/f = g'.
bool verify_derivative_identity(const ExtendedExpression& f, const ExtendedExpression& g);
/// 1/f = c * g'/g.
bool verify_log_derivative_identity(const ExtendedExpression& f, const NumberFieldElement& c, const ExtendedExpression& g);
/// (k x - e)/f = h'/h.
bool verify_log_factor_identity(const ExtendedExpression& f, const Integer& k, const Rational& e, const ExtendedExpression& h);
/// y^k = w1 * w2 and lie(w2) = e * w2.
bool verify_splitting(const ExtendedExpression& f, long k, const Rational& e, const ExtendedExpression& w1,
                      const ExtendedExpression& w2);
/// Nonconstant with zero Lie derivative.
bool verify_first_integral(const ExtendedExpression& phi, const ExtendedDerivation& der);

}  // namespace lpb
