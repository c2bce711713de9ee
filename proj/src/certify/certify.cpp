#include "lpb/certify/certify.hpp"

namespace lpb {

namespace {

ExtendedExpression one() { return ExtendedExpression::constant(NumberFieldElement(Rational(1))); }

// f as an expression, with f_num/f_den split out for a derivation
ExtendedDerivation derivation_for(const ExtendedExpression& f) {
  ExtendedDerivation der;
  if (f.is_zero()) {
    der.f_num = Poly();
    return der;
  }
  if (!f.is_single_term() || !f.terms().begin()->first.is_one())
    throw InvalidInput("f must be a rational function of x");
  const auto num = to_rational_poly(f.terms().begin()->second);
  const auto den = to_rational_poly(f.den());
  if (!num || !den) throw InvalidInput("f must have rational coefficients");
  der.f_num = *num;
  der.f_den = *den;
  return der;
}

bool only_x(const ExtendedExpression& e) {
  return !e.mentions(Generator::Y) && !e.mentions(Generator::T) && !e.mentions(Generator::Gamma1) &&
         !e.mentions(Generator::Gamma2);
}

}  // namespace

ExtendedExpression to_expression(const RationalFunction& r) { return ExtendedExpression::from_fraction(r.num(), r.den()); }

ExtendedExpression to_expression(const KRationalFunction& r) { return ExtendedExpression(r.num(), r.den()); }

namespace {

// Multiplies the positive and negative powers separately so the fraction is normalized once.
template <class Factors, class Lift>
ExtendedExpression product_of_powers(const Factors& factors, Lift lift) {
  KPoly num(NumberFieldElement(Rational(1))), den(NumberFieldElement(Rational(1)));
  for (const auto& pf : factors) {
    if (!pf.exponent.fits_slong_p()) throw InvalidInput("exponent out of range");
    const long n = pf.exponent.get_si();
    const KPoly p = pow(lift(pf.factor), static_cast<unsigned>(n < 0 ? -n : n));
    (n < 0 ? den : num) = (n < 0 ? den : num) * p;
  }
  return ExtendedExpression(num, den);
}

}  // namespace

ExtendedExpression to_expression(const std::vector<PowerFactor>& factors) {
  return product_of_powers(factors, [](const KPoly& p) { return p; });
}

ExtendedExpression to_expression(const std::vector<RationalPowerFactor>& factors) {
  return product_of_powers(factors, [](const Poly& p) { return to_kpoly(p); });
}

FirstIntegralPair build_first_integrals(const RationalFunction& f, const Verdict& v) {
  if (!v.internal || !v.cond_iii.witness) throw InvalidInput("first integrals need an internal verdict");
  const ConditionIII& c3 = *v.cond_iii.witness;

  FirstIntegralPair pair;
  pair.derivation.f_num = f.num();
  pair.derivation.f_den = f.den();

  const ExtendedExpression t = ExtendedExpression::generator(Generator::T);
  const ExtendedExpression g1 = ExtendedExpression::generator(Generator::Gamma1);
  const ExtendedExpression g2 = ExtendedExpression::generator(Generator::Gamma2);

  if (const auto* d = std::get_if<DerivativeWitness>(&v.cond_ii)) {
    pair.phi1 = to_expression(d->g) - t;
    pair.uses_t = true;
  } else if (const auto* l = std::get_if<LogDerivativeWitness>(&v.cond_ii)) {
    // g(x) has logarithmic derivative 1/c along the flow, as gamma1 does
    pair.derivation.lambda1 = NumberFieldElement(Rational(1)) / l->c;
    pair.phi1 = to_expression(l->g) / g1;
    pair.uses_gamma1 = true;
  } else {
    throw InvalidInput("first integrals need condition (ii)");
  }

  const ExtendedExpression y = ExtendedExpression::generator(Generator::Y);
  ExtendedExpression phi2 = y.pow(c3.k.get_si()) / to_expression(c3.h);
  const NumberFieldElement e(c3.e);
  if (!is_zero(c3.e)) {
    if (pair.uses_gamma1 && pair.derivation.lambda1 == e) {
      phi2 = phi2 / g1;
    } else {
      pair.derivation.lambda2 = e;
      phi2 = phi2 / g2;
      pair.uses_gamma2 = true;
    }
  }
  pair.phi2 = phi2;

  if (!verify_first_integral(pair.phi1, pair.derivation) || !verify_first_integral(pair.phi2, pair.derivation))
    throw NumericFailure("constructed first integral is not constant along the flow");
  return pair;
}

Splitting build_splitting(const RationalFunction& f, const ConditionIII& c3) {
  Splitting s;
  s.k = static_cast<int>(c3.k.get_si());
  s.e = c3.e;
  s.w1 = to_expression(c3.h);
  s.w2 = ExtendedExpression::generator(Generator::Y).pow(s.k) / s.w1;
  if (!verify_splitting(to_expression(f), s.k, s.e, s.w1, s.w2))
    throw InvalidInput("splitting certificate does not verify");
  return s;
}

bool verify_independence(const ExtendedExpression& phi1, const ExtendedExpression& phi2) {
  const ExtendedExpression j = phi1.partial_x() * phi2.partial_y() - phi1.partial_y() * phi2.partial_x();
  return !j.is_zero();
}

bool verify_independence(const FirstIntegralPair& pair) { return verify_independence(pair.phi1, pair.phi2); }

bool verify_derivative_identity(const ExtendedExpression& f, const ExtendedExpression& g) {
  if (f.is_zero() || !only_x(f) || !only_x(g)) return false;
  return g.partial_x() * f == one();
}

bool verify_log_derivative_identity(const ExtendedExpression& f, const NumberFieldElement& c, const ExtendedExpression& g) {
  if (f.is_zero() || g.is_zero() || !only_x(f) || !only_x(g)) return false;
  return ExtendedExpression::constant(c) * g.partial_x() * f == g;
}

bool verify_log_factor_identity(const ExtendedExpression& f, const Integer& k, const Rational& e, const ExtendedExpression& h) {
  if (is_zero(k) || f.is_zero() || h.is_zero() || !only_x(f) || !only_x(h)) return false;
  const ExtendedExpression lhs = ExtendedExpression::from_poly(Poly(std::vector<Rational>{-e, Rational(k)})) * h;
  return lhs == f * h.partial_x();
}

bool verify_splitting(const ExtendedExpression& f, long k, const Rational& e, const ExtendedExpression& w1,
                      const ExtendedExpression& w2) {
  if (k == 0 || !only_x(w1)) return false;
  const ExtendedExpression y = ExtendedExpression::generator(Generator::Y);
  if (y.pow(k) != w1 * w2) return false;
  const ExtendedDerivation der = derivation_for(f);
  return lie_derivative(w2, der) == ExtendedExpression::constant(NumberFieldElement(e)) * w2;
}

bool verify_first_integral(const ExtendedExpression& phi, const ExtendedDerivation& der) {
  const bool constant = only_x(phi) && !phi.mentions(Generator::X);
  return !constant && lie_derivative(phi, der).is_zero();
}

}  // namespace lpb
