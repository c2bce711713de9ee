#include "lpb/ratfield/rational_function.hpp"

namespace lpb {

RationalFunction rf_normalize(const Poly& numP, const Poly& denQ) { return RationalFunction(numP, denQ); }

RationalFunction rf_derivative(const RationalFunction& r) { return r.derivative(); }

RationalFunction log_derivative(const RationalFunction& r) {
  if (r.is_zero()) throw DivisionByZero("logarithmic derivative of zero");
  return r.derivative() / r;
}

RationalFunction rf_power(const RationalFunction& r, long exponent) {
  if (exponent < 0) {
    if (r.is_zero()) throw DivisionByZero("negative power of zero");
    return RationalFunction(pow(r.den(), static_cast<unsigned>(-exponent)), pow(r.num(), static_cast<unsigned>(-exponent)));
  }
  return RationalFunction(pow(r.num(), static_cast<unsigned>(exponent)), pow(r.den(), static_cast<unsigned>(exponent)));
}

KRationalFunction to_krf(const RationalFunction& r) { return KRationalFunction(to_kpoly(r.num()), to_kpoly(r.den())); }

std::string format_rf(const RationalFunction& r, std::string_view var) {
  if (r.is_polynomial()) {
    // den is monic, so a constant denominator is 1
    return format_poly(r.num(), var);
  }
  return "(" + format_poly(r.num(), var) + ")/(" + format_poly(r.den(), var) + ")";
}

std::string format_rf(const KRationalFunction& r, std::string_view var, std::string_view field_var) {
  if (r.is_polynomial()) return format_poly(r.num(), var, field_var);
  return "(" + format_poly(r.num(), var, field_var) + ")/(" + format_poly(r.den(), var, field_var) + ")";
}

}  // namespace lpb
