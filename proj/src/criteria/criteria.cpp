#include "lpb/criteria/criteria.hpp"

#include "lpb/ratfield/hermite.hpp"

namespace lpb {

std::string_view reason_name(RosenlichtFailure r) {
  switch (r) {
    case RosenlichtFailure::ZeroFunction: return "zero-function";
    case RosenlichtFailure::NonzeroLogPart: return "nonzero-log-part";
    case RosenlichtFailure::NotProper: return "not-proper";
    case RosenlichtFailure::HigherOrderPoles: return "higher-order-poles";
    case RosenlichtFailure::NotCommensurable: return "residues-not-commensurable";
  }
  return "unknown";
}

std::string_view reason_name(LogFactorFailure r) {
  switch (r) {
    case LogFactorFailure::ZeroFunction: return "zero-function";
    case LogFactorFailure::DegreeTooLow: return "degree-too-low";
    case LogFactorFailure::MultiplicityTooHigh: return "multiplicity-too-high";
    case LogFactorFailure::SeveralDoubleRoots: return "several-double-roots";
    case LogFactorFailure::NonlinearDoubleRoot: return "nonlinear-double-root";
    case LogFactorFailure::InconsistentAlpha: return "inconsistent-alpha";
    case LogFactorFailure::IrrationalResidues: return "irrational-residues";
    case LogFactorFailure::TrivialLogarithm: return "trivial-logarithm";
  }
  return "unknown";
}

Poly antiderivative(const Poly& p) {
  std::vector<Rational> c(static_cast<std::size_t>(p.degree() + 2));
  for (int i = 0; i <= p.degree(); ++i)
    c[static_cast<std::size_t>(i + 1)] = p.coeff(static_cast<std::size_t>(i)) / Rational(i + 1);
  return Poly(std::move(c));
}

RationalFunction power_product(const std::vector<RationalPowerFactor>& factors) {
  RationalFunction out = RationalFunction::constant(Rational(1));
  for (const auto& pf : factors) out = out * rf_power(RationalFunction(pf.factor), pf.exponent.get_si());
  return out;
}

KRationalFunction power_product(const std::vector<PowerFactor>& factors) {
  KRationalFunction out = KRationalFunction::constant(NumberFieldElement(Rational(1)));
  for (const auto& pf : factors) {
    const long n = pf.exponent.get_si();
    const KPoly p = pow(pf.factor, static_cast<unsigned>(n < 0 ? -n : n));
    out = n < 0 ? out / KRationalFunction(p) : out * KRationalFunction(p);
  }
  return out;
}

bool check_condition_i(const RationalFunction& f) { return !f.is_zero(); }

namespace {

std::variant<LogDerivativeWitness, RosenlichtFailure> log_branch(const RationalFunction& inv) {
  if (!inv.is_proper()) return RosenlichtFailure::NotProper;
  if (!is_squarefree(inv.den())) return RosenlichtFailure::HigherOrderPoles;
  const ResidueData rd = rt_residues(inv);
  const auto w = residues_commensurable(rd);
  if (!w) return RosenlichtFailure::NotCommensurable;

  LogDerivativeWitness lw;
  lw.c = w->scale;
  for (const auto& g : w->groups) lw.g.push_back({g.factor, g.multiple});

  // c * sum n * p'/p must reproduce 1/f in the residue field
  KRationalFunction sum;
  for (const auto& pf : lw.g)
    sum = sum + KRationalFunction(pf.factor.derivative() * NumberFieldElement(Rational(pf.exponent)), pf.factor);
  if (sum * KRationalFunction::constant(lw.c) != to_krf(inv))
    throw NumericFailure("logarithmic-derivative witness failed its identity check");
  return lw;
}

}  // namespace

ConditionII check_condition_ii(const RationalFunction& f) {
  if (f.is_zero()) throw InvalidInput("condition (ii) needs a nonzero f");
  const RationalFunction inv = RationalFunction::constant(Rational(1)) / f;

  const HermiteForm hf = hermite_reduce(inv);
  if (hf.log_part_is_zero()) {
    const RationalFunction g = hf.rational_part + RationalFunction(antiderivative(hf.poly_part));
    if (rf_derivative(g) != inv) throw NumericFailure("derivative witness failed its identity check");
    return DerivativeWitness{g};
  }

  auto branch = log_branch(inv);
  if (auto* lw = std::get_if<LogDerivativeWitness>(&branch)) return std::move(*lw);
  return RosenlichtFails{RosenlichtFailure::NonzeroLogPart, std::get<RosenlichtFailure>(branch)};
}

namespace {

// Rationals a + m*n, n in Z, with m > 0.
struct Coset {
  Rational a, m;
};

std::optional<Coset> intersect(const Coset& u, const Coset& v) {
  Integer d = 1;
  for (const Rational* r : {&u.a, &u.m, &v.a, &v.m}) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r->get_den_mpz_t());
  const Integer a1 = Rational(u.a * d).get_num(), m1 = Rational(u.m * d).get_num();
  const Integer a2 = Rational(v.a * d).get_num(), m2 = Rational(v.m * d).get_num();
  Integer g;
  mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  const Integer diff = a2 - a1;
  if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  // m1*s = diff (mod m2)
  const Integer mod = m2 / g;
  Integer s = 0;
  if (mod != 1) {
    Integer inv;
    const Integer m1g = m1 / g;
    mpz_invert(inv.get_mpz_t(), m1g.get_mpz_t(), mod.get_mpz_t());
    s = Integer(diff / g) * inv % mod;
  }
  const Integer lcm = m1 * mod;
  return Coset{make_rational(a1 + m1 * s, d), make_rational(lcm, d)};
}

// Admissible alpha nearest to zero, positive on ties.
Rational nearest_to_zero(const Coset& c) {
  Rational q = c.a / c.m;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  const Rational low = c.a - Rational(fl) * c.m;  // in [0, m)
  const Rational high = low - c.m;
  return abs(high) < low ? high : low;
}

// With every pole of (x - alpha)/f simple and rational, residue (c - alpha)*b_c at each root c.
// Picks alpha minimising the common residue denominator k; alpha = 0 attains k0.
Rational least_denominator_alpha(const Poly& simple, const Poly& q, const Poly& dp) {
  std::vector<std::pair<Rational, Rational>> roots;  // (c, 1/b_c)
  std::vector<Rational> at_zero;
  for (const Rational& c : rational_roots(simple)) {
    const Rational b = q.evaluate(c) / dp.evaluate(c);
    roots.emplace_back(c, abs(Rational(1) / b));
    at_zero.push_back(c * b);
  }
  const Integer k0 = denominator_lcm(at_zero);
  constexpr long kSearchLimit = 4096;
  for (long k = 1; k < kSearchLimit && Integer(k) < k0; ++k) {
    std::optional<Coset> acc = Coset{roots[0].first, roots[0].second / Rational(k)};
    for (std::size_t i = 1; i < roots.size() && acc; ++i)
      acc = intersect(*acc, Coset{roots[i].first, roots[i].second / Rational(k)});
    if (acc) return nearest_to_zero(*acc);
  }
  return Rational(0);
}

}  // namespace

AlphaResult solve_alpha(const RationalFunction& f) {
  AlphaResult out;
  if (f.is_zero()) return out;
  const Poly& p = f.num();
  const Poly& q = f.den();
  if (p.degree() < q.degree() + 2) {
    out.failure = LogFactorFailure::DegreeTooLow;
    return out;
  }

  std::optional<Rational> forced;
  Poly simple(Rational(1));
  for (const auto& part : squarefree_decompose(p).parts) {
    if (part.multiplicity >= 3) {
      out.failure = LogFactorFailure::MultiplicityTooHigh;
      return out;
    }
    if (part.multiplicity == 2) {
      if (part.poly.degree() > 1) {
        const bool split = static_cast<int>(rational_roots(part.poly).size()) == part.poly.degree();
        out.failure = split ? LogFactorFailure::SeveralDoubleRoots : LogFactorFailure::NonlinearDoubleRoot;
        return out;
      }
      forced = -part.poly.coeff(0);  // parts are monic
    } else {
      simple = simple * part.poly;
    }
  }

  // residue at a root c of an irreducible factor: (c - alpha) * Q(c) / P'(c)
  std::optional<Rational> alpha = forced;
  bool constrained = forced.has_value();
  const Poly dp = p.derivative();
  if (!simple.is_constant()) {
    for (const Factor& fac : factor_over_Q(simple)) {
      if (fac.poly.degree() == 1) continue;
      const FieldPtr k = NumberField::create(fac.poly);
      const NumberFieldElement b = NumberFieldElement(k, q) / NumberFieldElement(k, dp);
      const NumberFieldElement a = NumberFieldElement::generator(k) * b;
      const std::vector<Rational> ac = a.coords();
      const std::vector<Rational> bc = b.coords();
      for (std::size_t j = 1; j < ac.size(); ++j) {
        // ac[j] - alpha * bc[j] = 0
        if (is_zero(bc[j])) {
          if (!is_zero(ac[j])) {
            out.failure = LogFactorFailure::InconsistentAlpha;
            return out;
          }
          continue;
        }
        const Rational candidate = ac[j] / bc[j];
        if (alpha && *alpha != candidate) {
          out.failure = LogFactorFailure::InconsistentAlpha;
          return out;
        }
        alpha = candidate;
        constrained = true;
      }
    }
  }

  AlphaSolution sol;
  sol.alpha_free = !constrained;
  sol.alpha = constrained ? *alpha : least_denominator_alpha(simple, q, dp);
  const RationalFunction shifted = RationalFunction(Poly(std::vector<Rational>{-sol.alpha, Rational(1)})) / f;
  if (shifted.is_zero() || !shifted.is_proper() || !is_squarefree(shifted.den())) {
    out.failure = LogFactorFailure::IrrationalResidues;
    return out;
  }
  const ResidueData rd = rt_residues(shifted);
  if (!residues_all_rational(rd)) {
    out.failure = LogFactorFailure::IrrationalResidues;
    return out;
  }
  sol.residues = rd.rational;
  out.solution = std::move(sol);
  return out;
}

ConditionIIIResult check_condition_iii(const RationalFunction& f) {
  ConditionIIIResult out;
  const AlphaResult ar = solve_alpha(f);
  if (!ar.solution) {
    out.failure = ar.failure;
    return out;
  }
  const AlphaSolution& sol = *ar.solution;
  std::vector<Rational> residues;
  for (const auto& g : sol.residues) residues.push_back(g.residue);
  if (residues.empty()) {
    out.failure = LogFactorFailure::TrivialLogarithm;
    return out;
  }

  ConditionIII w;
  w.k = denominator_lcm(residues);
  w.alpha = sol.alpha;
  w.e = Rational(w.k) * sol.alpha;
  w.alpha_free = sol.alpha_free;
  for (const auto& g : sol.residues) {
    const Rational n = Rational(w.k) * g.residue;
    w.h.push_back({g.factor, n.get_num()});
  }

  // h'/h = sum n * p'/p, without expanding h
  RationalFunction dlog;
  for (const auto& pf : w.h) dlog = dlog + RationalFunction(pf.factor.derivative(), pf.factor) * RationalFunction::constant(Rational(pf.exponent));
  const RationalFunction lhs = RationalFunction(Poly(std::vector<Rational>{-w.e, Rational(w.k)})) / f;
  if (lhs != dlog) throw NumericFailure("condition (iii) witness failed its identity check");
  out.witness = std::move(w);
  return out;
}

Verdict decide(const RationalFunction& f) {
  Verdict v;
  v.cond_i = check_condition_i(f);
  if (!v.cond_i) return v;
  v.cond_ii = check_condition_ii(f);
  v.cond_iii = check_condition_iii(f);
  v.internal = holds(v.cond_ii) && v.cond_iii.holds();
  return v;
}

}  // namespace lpb
