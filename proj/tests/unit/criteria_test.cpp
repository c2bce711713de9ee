#include <gtest/gtest.h>

#include <random>

#include "lpb/criteria/criteria.hpp"
#include "test_support.hpp"

using namespace lpb;
using namespace lpb::testing;

namespace {

RationalFunction RF(const Poly& n, const Poly& d = Poly(Rational(1))) { return RationalFunction(n, d); }

RationalFunction random_rf(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  return RF(random_poly(rng, deg(rng)), random_poly(rng, deg(rng)));
}

// (k x - e) * h * f.den == h' * f.num, cleared of all denominators
bool condition_iii_identity(const RationalFunction& f, const ConditionIII& w) {
  const RationalFunction h = power_product(w.h);
  const Poly lhs_factor = Poly(std::vector<Rational>{-w.e, Rational(w.k)});
  const Poly hn = h.num();
  const Poly hd = h.den();
  return (hn.derivative() * hd - hn * hd.derivative()) * f.num() == lhs_factor * hn * hd * f.den();
}

}  // namespace

TEST(ConditionI, Examples) {
  EXPECT_FALSE(check_condition_i(RationalFunction()));
  EXPECT_TRUE(check_condition_i(RF(P({1}))));
  EXPECT_TRUE(check_condition_i(RF(P({0, 0, 1}))));
}

TEST(ConditionII, DerivativeBranch) {
  auto c = check_condition_ii(RF(P({0, 0, 1})));
  ASSERT_TRUE(std::holds_alternative<DerivativeWitness>(c));
  EXPECT_EQ(std::get<DerivativeWitness>(c).g, RF(P({-1}), X()));

  auto c5 = check_condition_ii(RF(P({5})));
  ASSERT_TRUE(std::holds_alternative<DerivativeWitness>(c5));
  EXPECT_EQ(std::get<DerivativeWitness>(c5).g, RF(Poly(std::vector<Rational>{0, Q(1, 5)})));
}

TEST(ConditionII, LogDerivativeBranch) {
  auto c = check_condition_ii(RF(P({0, -1, 1})));
  ASSERT_TRUE(std::holds_alternative<LogDerivativeWitness>(c));
  const auto& w = std::get<LogDerivativeWitness>(c);
  EXPECT_EQ(w.c, NumberFieldElement(Rational(1)));
  EXPECT_EQ(power_product(w.g), to_krf(RF(P({-1, 1}), X())));

  auto cx = check_condition_ii(RF(X()));
  ASSERT_TRUE(std::holds_alternative<LogDerivativeWitness>(cx));
  EXPECT_EQ(power_product(std::get<LogDerivativeWitness>(cx).g), to_krf(RF(X())));
}

TEST(ConditionII, IrrationalScale) {
  const RationalFunction f = RF(P({-2, 0, 1}));
  auto c = check_condition_ii(f);
  ASSERT_TRUE(std::holds_alternative<LogDerivativeWitness>(c));
  const auto& w = std::get<LogDerivativeWitness>(c);
  ASSERT_TRUE(w.c.field());
  const KRationalFunction g = power_product(w.g);
  const KRationalFunction lhs = KRationalFunction::constant(w.c) * g.derivative() / g;
  EXPECT_EQ(lhs, to_krf(RationalFunction::constant(Rational(1)) / f));
}

TEST(ConditionII, Failures) {
  auto c = check_condition_ii(RF(P({-2, 0, 0, 1})));
  ASSERT_TRUE(std::holds_alternative<RosenlichtFails>(c));
  EXPECT_EQ(std::get<RosenlichtFails>(c).log_branch, RosenlichtFailure::NotCommensurable);

  auto c2 = check_condition_ii(RF(P({0, 0, -1, 1})));
  ASSERT_TRUE(std::holds_alternative<RosenlichtFails>(c2));
  EXPECT_EQ(std::get<RosenlichtFails>(c2).derivative_branch, RosenlichtFailure::NonzeroLogPart);
  EXPECT_EQ(std::get<RosenlichtFails>(c2).log_branch, RosenlichtFailure::HigherOrderPoles);

  // 1/f = x + 1/x is improper with a log part
  auto c3 = check_condition_ii(RationalFunction::constant(Rational(1)) / (RF(X()) + RF(P({1}), X())));
  ASSERT_TRUE(std::holds_alternative<RosenlichtFails>(c3));
  EXPECT_EQ(std::get<RosenlichtFails>(c3).log_branch, RosenlichtFailure::NotProper);

  EXPECT_THROW(check_condition_ii(RationalFunction()), InvalidInput);
}

TEST(SolveAlpha, Examples) {
  AlphaResult a = solve_alpha(RF(P({0, 0, 1})));
  ASSERT_TRUE(a.solution);
  EXPECT_EQ(a.solution->alpha, Rational(0));
  EXPECT_FALSE(a.solution->alpha_free);
  ASSERT_EQ(a.solution->residues.size(), 1u);
  EXPECT_EQ(a.solution->residues[0].residue, Rational(1));
  EXPECT_EQ(a.solution->residues[0].factor, X());

  AlphaResult b = solve_alpha(RF(P({0, -1, 1})));
  ASSERT_TRUE(b.solution);
  EXPECT_EQ(b.solution->alpha, Rational(0));
  EXPECT_TRUE(b.solution->alpha_free);
  ASSERT_EQ(b.solution->residues.size(), 1u);
  EXPECT_EQ(b.solution->residues[0].residue, Rational(1));
  EXPECT_EQ(b.solution->residues[0].factor, P({-1, 1}));

  AlphaResult c = solve_alpha(RF(P({0, 0, 0, 1})));
  EXPECT_FALSE(c.solution);
  EXPECT_EQ(c.failure, LogFactorFailure::MultiplicityTooHigh);
}

TEST(SolveAlpha, FreeAlphaMinimisesResidueDenominators) {
  // h = (x-5)^2 / ((x+1)^3 (x+3)) and f = (x - 3/2) h/h': every pole is rational, nothing pins alpha
  const RationalFunction h = power_product(std::vector<RationalPowerFactor>{
      {P({-5, 1}), Integer(2)}, {P({1, 1}), Integer(-3)}, {P({3, 1}), Integer(-1)}});
  const RationalFunction f = RF(Poly(std::vector<Rational>{Q(-3, 2), Rational(1)})) / log_derivative(h);
  const AlphaResult a = solve_alpha(f);
  ASSERT_TRUE(a.solution);
  EXPECT_TRUE(a.solution->alpha_free);

  std::vector<Rational> at_zero;
  for (const auto& g : rt_residues(RF(X()) / f).rational) at_zero.push_back(g.residue);
  EXPECT_GT(denominator_lcm(at_zero), Integer(1));

  const auto r = check_condition_iii(f);
  ASSERT_TRUE(r.holds());
  EXPECT_EQ(r.witness->k, Integer(1));
  EXPECT_TRUE(condition_iii_identity(f, *r.witness));
}

TEST(SolveAlpha, StructuralFailures) {
  EXPECT_EQ(solve_alpha(RF(P({1}))).failure, LogFactorFailure::DegreeTooLow);
  EXPECT_EQ(solve_alpha(RF(X())).failure, LogFactorFailure::DegreeTooLow);
  EXPECT_EQ(solve_alpha(RF(P({0, 0, 1}) * P({1, 1}) * P({1, 1}))).failure, LogFactorFailure::SeveralDoubleRoots);
  EXPECT_EQ(solve_alpha(RF(P({-2, 0, 1}) * P({-2, 0, 1}))).failure, LogFactorFailure::NonlinearDoubleRoot);
  // x^4 / (x^2+1): poles need deg P >= deg Q + 2, which holds, but x^4 is a quadruple root
  EXPECT_EQ(solve_alpha(RF(P({0, 0, 0, 0, 1}), P({1, 0, 1}))).failure, LogFactorFailure::MultiplicityTooHigh);
}

TEST(SolveAlpha, IrrationalPolesPinAlpha) {
  // f = (x-1)(x^2-2)/(2x) comes from h = x^2-2, alpha = 1
  const RationalFunction h = RF(P({-2, 0, 1}));
  const RationalFunction f = RF(P({-1, 1})) / log_derivative(h);
  AlphaResult a = solve_alpha(f);
  ASSERT_TRUE(a.solution);
  EXPECT_EQ(a.solution->alpha, Rational(1));
  EXPECT_FALSE(a.solution->alpha_free);
}

TEST(SolveAlpha, InconsistentConstraints) {
  // cube roots of 2 give residues with no common alpha making them rational
  AlphaResult a = solve_alpha(RF(P({-2, 0, 0, 1}) * P({-3, 0, 1})));
  EXPECT_FALSE(a.solution);
  EXPECT_EQ(a.failure, LogFactorFailure::InconsistentAlpha);
}

TEST(ConditionIII, Examples) {
  auto r = check_condition_iii(RF(P({0, 0, 1})));
  ASSERT_TRUE(r.holds());
  EXPECT_EQ(r.witness->k, Integer(1));
  EXPECT_EQ(r.witness->e, Rational(0));
  ASSERT_EQ(r.witness->h.size(), 1u);
  EXPECT_EQ(r.witness->h[0].factor, X());
  EXPECT_EQ(r.witness->h[0].exponent, Integer(1));

  auto rx = check_condition_iii(RF(X()));
  EXPECT_FALSE(rx.holds());
  EXPECT_EQ(rx.failure, LogFactorFailure::DegreeTooLow);
  auto r1 = check_condition_iii(RF(P({1})));
  EXPECT_FALSE(r1.holds());
  EXPECT_EQ(r1.failure, LogFactorFailure::DegreeTooLow);
}

TEST(ConditionIII, DoubleRootWithSimplePole) {
  const RationalFunction f = RF(P({0, 0, -1, 1}));
  auto r = check_condition_iii(f);
  ASSERT_TRUE(r.holds());
  EXPECT_EQ(r.witness->alpha, Rational(0));
  EXPECT_EQ(r.witness->k, Integer(1));
  EXPECT_EQ(power_product(r.witness->h), RF(P({-1, 1}), X()));
  EXPECT_TRUE(condition_iii_identity(f, *r.witness));
}

TEST(ConditionIII, FractionalResiduesScaleK) {
  const RationalFunction f = RF(P({-2, 0, 1}));
  auto r = check_condition_iii(f);
  ASSERT_TRUE(r.holds());
  EXPECT_EQ(r.witness->k, Integer(2));
  EXPECT_EQ(r.witness->e, Rational(0));
  EXPECT_EQ(power_product(r.witness->h), f);
  EXPECT_TRUE(condition_iii_identity(f, *r.witness));
}

TEST(Decide, Examples) {
  EXPECT_TRUE(decide(RF(P({0, 0, 1}))).internal);
  EXPECT_FALSE(decide(RF(X())).internal);
  EXPECT_FALSE(decide(RF(P({1}))).internal);
  Verdict z = decide(RationalFunction());
  EXPECT_FALSE(z.cond_i);
  EXPECT_FALSE(z.internal);
  EXPECT_TRUE(decide(RF(P({0, -1, 1}))).internal);

  Verdict v = decide(RF(P({0, 0, -1, 1})));
  EXPECT_FALSE(v.internal);
  EXPECT_FALSE(holds(v.cond_ii));
  EXPECT_TRUE(v.cond_iii.holds());

  Verdict cube = decide(RF(P({0, 0, 0, 1})));
  EXPECT_FALSE(cube.internal);
  EXPECT_EQ(cube.cond_iii.failure, LogFactorFailure::MultiplicityTooHigh);
}

TEST(Decide, InternalityIsNotBirationallyInvariant) {
  // x -> -1/x carries x' = x^2 to x' = 1
  EXPECT_TRUE(decide(RF(P({0, 0, 1}))).internal);
  EXPECT_FALSE(decide(RF(P({1}))).internal);
}

TEST(Properties, DerivativeRoundTrip) {
  std::mt19937_64 rng(404);
  int checked = 0;
  while (checked < 100) {
    const RationalFunction g = random_rf(rng, 4);
    const RationalFunction dg = rf_derivative(g);
    if (dg.is_zero()) continue;
    const RationalFunction f = RationalFunction::constant(Rational(1)) / dg;
    auto c = check_condition_ii(f);
    ASSERT_TRUE(std::holds_alternative<DerivativeWitness>(c)) << format_rf(g);
    EXPECT_EQ(rf_derivative(std::get<DerivativeWitness>(c).g), dg);
    ++checked;
  }
}

TEST(Properties, LogDerivativeWitnessesAreSound) {
  std::mt19937_64 rng(405);
  int witnesses = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const RationalFunction f = random_rf(rng, 4);
    if (f.is_zero()) continue;
    auto c = check_condition_ii(f);
    if (auto* w = std::get_if<LogDerivativeWitness>(&c)) {
      const KRationalFunction g = power_product(w->g);
      EXPECT_EQ(KRationalFunction::constant(w->c) * g.derivative() / g,
                to_krf(RationalFunction::constant(Rational(1)) / f));
      ++witnesses;
    } else if (auto* d = std::get_if<DerivativeWitness>(&c)) {
      EXPECT_EQ(rf_derivative(d->g), RationalFunction::constant(Rational(1)) / f);
    }
  }
  EXPECT_GT(witnesses, 0);
}

TEST(Properties, LogFactorRoundTrip) {
  std::mt19937_64 rng(406);
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> deg(1, 3);
  std::uniform_int_distribution<long> expo(-3, 3);
  std::uniform_int_distribution<long> an(-6, 6);
  std::uniform_int_distribution<long> ad(1, 4);
  int checked = 0;
  while (checked < 100) {
    std::vector<RationalPowerFactor> gen;
    const int n = count(rng);
    bool nonzero = false;
    while (static_cast<int>(gen.size()) < n) {
      Poly p = random_irreducible(rng, deg(rng));
      bool dup = false;
      for (const auto& g : gen) dup = dup || g.factor == p;
      if (dup) continue;
      long m = expo(rng);
      nonzero = nonzero || m != 0;
      gen.push_back({p, Integer(m)});
    }
    if (!nonzero) continue;
    const Rational alpha = Q(an(rng), ad(rng));
    const RationalFunction h = power_product(gen);
    const RationalFunction f = RF(Poly(std::vector<Rational>{-alpha, Rational(1)})) / log_derivative(h);
    auto r = check_condition_iii(f);
    ASSERT_TRUE(r.holds()) << format_rf(f) << " " << reason_name(r.failure);
    EXPECT_TRUE(condition_iii_identity(f, *r.witness));
    EXPECT_NE(r.witness->k, Integer(0));
    ++checked;
  }
}

TEST(Properties, LogFactorVerdictIsScaleInvariant) {
  std::mt19937_64 rng(407);
  std::uniform_int_distribution<long> ln(1, 7);
  for (int trial = 0; trial < 80; ++trial) {
    const RationalFunction f = random_rf(rng, 4) * RF(P({0, 0, 1}));
    if (f.is_zero()) continue;
    const Rational lambda = Q(trial % 2 ? -ln(rng) : ln(rng), ln(rng));
    const RationalFunction g = RationalFunction::constant(lambda) * f;
    auto a = check_condition_iii(f);
    auto b = check_condition_iii(g);
    EXPECT_EQ(a.holds(), b.holds()) << format_rf(f);
    if (a.holds()) EXPECT_EQ(a.witness->alpha, b.witness->alpha);
  }
}
