#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lpb/oracle/oracle.hpp"
#include "test_support.hpp"

using namespace lpb;
using namespace lpb::testing;

namespace {

RationalFunction RF(const Poly& n, const Poly& d = Poly(Rational(1))) { return RationalFunction(n, d); }

ExtendedDerivation flow(const Poly& fn, const Poly& fd = Poly(Rational(1))) { return {fn, fd, Rational(0), Rational(0)}; }

double rabs(Real v) { return std::fabs(to_double(v)); }

TrajectoryConfig start(long x0, long y0) {
  TrajectoryConfig cfg;
  cfg.x0 = x0;
  cfg.y0 = y0;
  return cfg;
}

const ExtendedExpression x = ExtendedExpression::generator(Generator::X);
const ExtendedExpression y = ExtendedExpression::generator(Generator::Y);
const ExtendedExpression t = ExtendedExpression::generator(Generator::T);

}  // namespace

TEST(Reals, Conversion) {
  const Real third = to_real(Rational(1, 3));
  EXPECT_LT(rabs(third * 3 - 1), 1e-32);
  const std::vector<Real> roots = real_roots(P({-2, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_LT(rabs(roots[1] * roots[1] - 2), 1e-30);
  EXPECT_LT(to_double(roots[0]), 0);
  EXPECT_TRUE(real_roots(P({1, 0, 1})).empty());
}

TEST(Rk4, ZeroField) {
  const Trajectory tr = rk4_flow(flow(Poly()), start(1, 1));
  ASSERT_FALSE(tr.aborted);
  const auto& last = tr.samples.back();
  EXPECT_NEAR(to_double(last.s), 0.5, 1e-15);
  EXPECT_NEAR(to_double(last.x), 1.0, 1e-15);
  EXPECT_NEAR(to_double(last.y), std::exp(0.5), 1e-8);
}

TEST(Rk4, ConstantField) {
  const Trajectory tr = rk4_flow(flow(P({1})), start(0, 1));
  ASSERT_FALSE(tr.aborted);
  for (const auto& s : tr.samples) EXPECT_LT(rabs(s.x - s.s), 1e-10);
}

TEST(Rk4, SquareField) {
  const Trajectory tr = rk4_flow(flow(P({0, 0, 1})), start(1, 1));
  ASSERT_FALSE(tr.aborted);
  for (const auto& s : tr.samples) EXPECT_LT(rabs(s.x - Real(1) / (1 - s.s)), 1e-6);
  EXPECT_NEAR(to_double(tr.samples.back().x), 2.0, 1e-6);
}

TEST(Rk4, BlowUpIsFlagged) {
  TrajectoryConfig cfg = start(1, 1);
  cfg.horizon = 2.0;
  cfg.step = 1e-3;
  const Trajectory tr = rk4_flow(flow(P({0, 0, 1})), cfg);
  EXPECT_TRUE(tr.aborted);
  EXPECT_FALSE(tr.abort_reason.empty());
  // exact blow-up at s = 1; the discrete flow may lag by a few steps
  EXPECT_LT(to_double(tr.samples.back().s), 1.01);
}

TEST(Rk4, PoleMarginStopsTheFlow) {
  // x' = -1/x drives x from 1 towards the pole at 0 by s = 0.5
  TrajectoryConfig cfg = start(1, 1);
  cfg.horizon = 1.0;
  const Trajectory tr = rk4_flow(flow(P({-1}), P({0, 1})), cfg);
  EXPECT_TRUE(tr.aborted);
  EXPECT_GE(rabs(tr.samples.back().x), 0.05);
}

TEST(Rk4, RejectsBadConfig) {
  TrajectoryConfig cfg = start(1, 1);
  cfg.step = 0;
  EXPECT_THROW(rk4_flow(flow(P({1})), cfg), InvalidInput);
  cfg = start(1, 1);
  cfg.horizon = -1;
  EXPECT_THROW(rk4_flow(flow(P({1})), cfg), InvalidInput);
  TrajectoryConfig near = start(0, 1);
  near.x0 = Rational(1, 100);
  EXPECT_THROW(rk4_flow(flow(P({1}), P({0, 1})), near), InvalidInput);
  TrajectoryConfig avoid = start(1, 1);
  avoid.avoid.push_back(P({-1, 1}));
  EXPECT_THROW(rk4_flow(flow(P({1})), avoid), InvalidInput);
}

TEST(Conservation, SquareBenchmark) {
  const ExtendedDerivation der = flow(P({0, 0, 1}));
  const Trajectory tr = rk4_flow(der, start(1, 1));
  const ExtendedExpression phi1 = ExtendedExpression::from_fraction(P({1}), X()) + t;
  const ExtendedExpression phi2 = y / x;
  const DriftReport good = conservation_check(std::vector<ExtendedExpression>{phi1, phi2}, tr);
  EXPECT_LE(good.drift[0], 1e-8);
  EXPECT_LE(good.drift[1], 1e-8);
  EXPECT_EQ(good.excluded_samples, 0);
  const DriftReport bad = conservation_check(std::vector<ExtendedExpression>{x + y}, tr);
  EXPECT_GE(bad.max_drift, 1e-2);
}

TEST(Conservation, FourthOrderConvergence) {
  const RationalFunction f = RF(P({0, 0, 1}));
  const FirstIntegralPair pair = build_first_integrals(f, decide(f));
  TrajectoryConfig cfg = start(1, 1);
  const double coarse = conservation_check(pair, rk4_flow(pair.derivation, cfg)).max_drift;
  cfg.step = 5e-5;
  const double fine = conservation_check(pair, rk4_flow(pair.derivation, cfg)).max_drift;
  EXPECT_GT(fine, 0.0);
  EXPECT_GE(coarse / fine, 8.0);
}

TEST(Conservation, IrrationalConstants) {
  const RationalFunction f = RF(P({-2, 0, 1}));
  const FirstIntegralPair pair = build_first_integrals(f, decide(f));
  // x = -sqrt2 tanh(sqrt2 s) stays between the poles at +-sqrt2
  TrajectoryConfig cfg = start(0, 1);
  cfg.avoid = certificate_denominators(pair);
  const Trajectory tr = rk4_flow(pair.derivation, cfg);
  ASSERT_FALSE(tr.aborted) << tr.abort_reason;
  EXPECT_LE(conservation_check(pair, tr).max_drift, 1e-8);
}

TEST(Conservation, CsvDump) {
  const Trajectory tr = rk4_flow(flow(P({1})), [] {
    TrajectoryConfig cfg = start(0, 1);
    cfg.step = 0.25;
    return cfg;
  }());
  std::ostringstream out;
  write_csv(out, tr, {x - t});
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "s,x,y,t,gamma1,gamma2,phi1");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(NumericResidues, Examples) {
  auto a = numeric_residues(RF(P({1}), P({0, -1, 1})));
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(static_cast<double>(a[0].root.real()), 0.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(a[0].residue.real()), -1.0, 1e-9);
  EXPECT_NEAR(static_cast<double>(a[1].residue.real()), 1.0, 1e-9);

  auto b = numeric_residues(RF(P({1}), P({-2, 0, 1})));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NEAR(static_cast<double>(b[0].residue.real()), -1.0 / (2.0 * std::sqrt(2.0)), 1e-9);
  EXPECT_NEAR(static_cast<double>(b[1].residue.real()), 1.0 / (2.0 * std::sqrt(2.0)), 1e-9);

  auto c = numeric_residues(RF(P({1}), P({1, 0, 1})));
  ASSERT_EQ(c.size(), 2u);
  // roots sorted -i, +i; residue at +i is -i/2
  EXPECT_NEAR(static_cast<double>(c[0].residue.imag()), 0.5, 1e-9);
  EXPECT_NEAR(static_cast<double>(c[1].residue.imag()), -0.5, 1e-9);
  EXPECT_NEAR(static_cast<double>(c[1].residue.real()), 0.0, 1e-9);

  EXPECT_THROW(numeric_residues(RF(P({1}), P({0, 0, 1}))), InvalidInput);
}

TEST(NumericResidues, MatchSymbolicOnSplitDenominators) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> root(-6, 6);
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> roots;
    const int n = count(rng);
    while (static_cast<int>(roots.size()) < n) {
      Rational c = Q(root(rng), 1 + trial % 4);
      if (std::find(roots.begin(), roots.end(), c) == roots.end()) roots.push_back(c);
    }
    const RationalFunction r = RF(random_poly(rng, n - 1), from_roots(roots));
    const ResidueData rd = rt_residues(r);
    EXPECT_LE(max_residue_error(rd, numeric_residues(r)), 1e-9) << format_rf(r);
  }
}
