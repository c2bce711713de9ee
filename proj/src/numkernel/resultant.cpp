#include "lpb/numkernel/resultant.hpp"

namespace lpb {

Rational resultant(const Poly& a, const Poly& b) { return subresultant_resultant<Rational>(a, b); }

Poly resultant(const BiPoly& a, const BiPoly& b) { return subresultant_resultant<Poly>(a, b); }

BiPoly constant_in_z(const Poly& p) {
  return p.map<Poly>([](const Rational& c) { return Poly(c); });
}

}  // namespace lpb
