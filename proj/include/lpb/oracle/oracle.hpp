#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lpb/certify/certify.hpp"
#include "lpb/ratfield/residues.hpp"

namespace lpb {

/// Working precision of the integrator; RK4 truncation error at the default step is far
/// below double rounding.
using Real = __float128;

Real to_real(const Rational& r);
double to_double(Real v);

/// Real embedding of number-field constants: each field is sent to its smallest real root.
/// Throws NumericFailure when a field has no real embedding.
class RealEmbedding {
 public:
  Real operator()(const NumberFieldElement& u);

 private:
  std::map<std::vector<std::string>, Real> roots_;  // keyed by minpoly coefficients
};

/// Real roots of p, ascending, refined in Real precision.
std::vector<Real> real_roots(const Poly& p);

struct TrajectoryConfig {
  Rational x0{1};
  Rational y0{1};
  Rational t0{0};
  Rational gamma1_0{1};
  Rational gamma2_0{1};
  double step = 1e-4;
  double horizon = 0.5;
  double margin = 0.05;
  double magnitude_bound = 1e12;
  std::vector<Poly> avoid;  // extra denominators whose real roots count as poles
};

struct TrajectorySample {
  Real s, x, y, t, gamma1, gamma2;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool aborted = false;
  std::string abort_reason;
};

/// Classical RK4 for the derivation's vector field. Throws InvalidInput on a bad config.
Trajectory rk4_flow(const ExtendedDerivation& der, const TrajectoryConfig& cfg);

struct DriftReport {
  double max_drift = 0;
  std::vector<double> drift;  // per expression
  int excluded_samples = 0;
};

/// max |phi(s) - phi(0)| / max(1, |phi(0)|) over the samples.
DriftReport conservation_check(const std::vector<ExtendedExpression>& phis, const Trajectory& traj);
DriftReport conservation_check(const FirstIntegralPair& pair, const Trajectory& traj);

/// Denominators of the pair, for TrajectoryConfig::avoid. A denominator over a number
/// field is replaced by its norm, whose real roots include those of every embedding.
std::vector<Poly> certificate_denominators(const FirstIntegralPair& pair);

struct NumericResidue {
  std::complex<long double> root;
  std::complex<long double> residue;
};

/// Roots of the denominator by Aberth iteration; residue num(c)/den'(c) at each.
/// Throws NumericFailure on non-convergence, InvalidInput on a repeated factor.
std::vector<NumericResidue> numeric_residues(const RationalFunction& proper);

/// Largest |numeric - symbolic| over all numeric roots, each matched to the rational
/// group whose factor vanishes there. Requires all residues rational.
double max_residue_error(const ResidueData& rd, const std::vector<NumericResidue>& numeric);

/// Header s,x,y,t,gamma1,gamma2,phi1,... then one row per sample.
void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<ExtendedExpression>& phis);

}  // namespace lpb
