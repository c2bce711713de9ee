#include "lpb/ratfield/residues.hpp"

#include <algorithm>

#include "lpb/numkernel/resultant.hpp"

namespace lpb {

namespace {

// num - z*den' as a polynomial in x with coefficients in Q[z]
BiPoly rt_second_argument(const Poly& num, const Poly& den) {
  const Poly dden = den.derivative();
  const int n = std::max(num.degree(), dden.degree());
  std::vector<Poly> c;
  for (int i = 0; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    c.push_back(Poly(std::vector<Rational>{num.coeff(k), -dden.coeff(k)}));
  }
  return BiPoly(std::move(c));
}

KPoly pole_factor(const Poly& num, const Poly& den, const NumberFieldElement& residue) {
  const KPoly d = to_kpoly(den);
  return gcd(d, to_kpoly(num) - to_kpoly(den.derivative()) * residue);
}

}  // namespace

ResidueData rt_residues(const RationalFunction& proper) {
  ResidueData rd;
  rd.numerator = proper.num();
  rd.denominator = proper.den();
  if (proper.is_zero()) {
    rd.rt_resultant = Poly(Rational(1));
    rd.squarefree_resultant = Poly(Rational(1));
    return rd;
  }
  if (!proper.is_proper()) throw InvalidInput("residues need a proper rational function");
  if (!is_squarefree(proper.den())) throw InvalidInput("residues need a squarefree denominator");

  rd.rt_resultant = resultant(constant_in_z(proper.den()), rt_second_argument(proper.num(), proper.den()));
  rd.squarefree_resultant = squarefree_part(rd.rt_resultant);

  Poly rest = rd.squarefree_resultant;
  for (const Rational& r : rational_roots(rd.squarefree_resultant)) {
    Poly factor = gcd(proper.den(), proper.num() - proper.den().derivative() * r);
    rd.rational.push_back({r, std::move(factor)});
    rest = exact_quotient(rest, Poly(std::vector<Rational>{-r, Rational(1)}));
  }
  if (!rest.is_constant()) {
    for (const Factor& fac : factor_over_Q(rest)) {
      const NumberFieldElement rho = NumberFieldElement::generator(NumberField::create(fac.poly));
      rd.algebraic.push_back({rho, pole_factor(proper.num(), proper.den(), rho)});
    }
  }
  return rd;
}

bool residues_all_rational(const ResidueData& rd) {
  return static_cast<int>(rd.rational.size()) == rd.squarefree_resultant.degree();
}

RationalFunction residue_sum(const ResidueData& rd) {
  RationalFunction sum;
  for (const auto& g : rd.rational)
    sum = sum + RationalFunction(g.factor.derivative() * g.residue, g.factor);
  return sum;
}

Poly ratio_resultant(const Poly& r) {
  const int d = r.degree();
  std::vector<Poly> c;
  for (int j = 0; j <= d; ++j)
    c.push_back(Poly::monomial(r.coeff(static_cast<std::size_t>(j)), static_cast<std::size_t>(d - j)));
  return resultant(constant_in_z(r), BiPoly(std::move(c)));
}

std::optional<CommensurabilityWitness> residues_commensurable(const ResidueData& rd) {
  if (rd.squarefree_resultant.degree() < 1) throw InvalidInput("no residues to compare");

  CommensurabilityWitness w;
  if (residues_all_rational(rd)) {
    std::vector<Rational> values;
    for (const auto& g : rd.rational) values.push_back(g.residue);
    const Rational c = rational_gcd(values);
    w.scale = c;
    for (const auto& g : rd.rational) {
      const Rational n = g.residue / c;
      w.groups.push_back({g.residue, to_kpoly(g.factor), n.get_num()});
    }
    return w;
  }

  const Poly t = ratio_resultant(rd.squarefree_resultant);
  const std::vector<Rational> ratios = rational_roots(t);
  if (static_cast<int>(ratios.size()) != t.degree()) return std::nullopt;

  // every residue is q * c0 for a rational q, with c0 one fixed irrational residue
  const NumberFieldElement c0 = rd.algebraic.front().residue;
  const KPoly rk = to_kpoly(rd.squarefree_resultant);
  std::vector<Rational> qs;
  for (const Rational& q : ratios) {
    if (!qs.empty() && qs.back() == q) continue;
    if (rk.evaluate(c0 * NumberFieldElement(q)).is_zero()) qs.push_back(q);
  }
  if (static_cast<int>(qs.size()) != rd.squarefree_resultant.degree())
    throw NumericFailure("ratio resultant and residue field disagree");

  const Rational s = rational_gcd(qs);
  w.scale = c0 * NumberFieldElement(s);
  for (const Rational& q : qs) {
    const NumberFieldElement residue = c0 * NumberFieldElement(q);
    w.groups.push_back({residue, pole_factor(rd.numerator, rd.denominator, residue), Rational(q / s).get_num()});
  }
  return w;
}

}  // namespace lpb
