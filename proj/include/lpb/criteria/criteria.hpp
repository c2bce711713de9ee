#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "lpb/ratfield/residues.hpp"

namespace lpb {

enum class RosenlichtFailure {
  ZeroFunction,
  NonzeroLogPart,
  NotProper,
  HigherOrderPoles,
  NotCommensurable,
};

enum class LogFactorFailure {
  ZeroFunction,
  DegreeTooLow,         // deg P < deg Q + 2
  MultiplicityTooHigh,  // some root of P of multiplicity >= 3
  SeveralDoubleRoots,   // double roots all rational, but more than one
  NonlinearDoubleRoot,  // an irrational double root
  InconsistentAlpha,    // the rationality equations have no common solution
  IrrationalResidues,
  TrivialLogarithm,     // every residue vanishes, so h would be constant
};

std::string_view reason_name(RosenlichtFailure r);
std::string_view reason_name(LogFactorFailure r);

/// factor^exponent; factor is monic and, for rational data, has rational coefficients.
struct PowerFactor {
  KPoly factor;
  Integer exponent;
};

struct RationalPowerFactor {
  Poly factor;
  Integer exponent;
};

/// 1/f = d/dx(g).
struct DerivativeWitness {
  RationalFunction g;
};

/// 1/f = c * g'/g with g = product of factor^exponent over the field of c.
struct LogDerivativeWitness {
  NumberFieldElement c;
  std::vector<PowerFactor> g;
};

struct RosenlichtFails {
  RosenlichtFailure derivative_branch;
  RosenlichtFailure log_branch;
};

using ConditionII = std::variant<DerivativeWitness, LogDerivativeWitness, RosenlichtFails>;

inline bool holds(const ConditionII& c) { return !std::holds_alternative<RosenlichtFails>(c); }

/// (k*x - e)/f = h'/h with e = k*alpha.
struct ConditionIII {
  Integer k;
  Rational e;
  Rational alpha;
  std::vector<RationalPowerFactor> h;
  bool alpha_free = false;  // no pole constrained alpha; 0 was chosen
};

struct ConditionIIIResult {
  std::optional<ConditionIII> witness;
  LogFactorFailure failure = LogFactorFailure::ZeroFunction;  // meaningful when witness is empty
  bool holds() const { return witness.has_value(); }
};

struct AlphaSolution {
  Rational alpha;
  bool alpha_free = false;
  std::vector<RationalResidueGroup> residues;  // of (x - alpha)/f, nonzero only
};

struct AlphaResult {
  std::optional<AlphaSolution> solution;
  LogFactorFailure failure = LogFactorFailure::ZeroFunction;
};

struct Verdict {
  bool cond_i = false;
  ConditionII cond_ii = RosenlichtFails{RosenlichtFailure::ZeroFunction, RosenlichtFailure::ZeroFunction};
  ConditionIIIResult cond_iii;
  bool internal = false;
};

bool check_condition_i(const RationalFunction& f);

/// Throws InvalidInput when f = 0.
ConditionII check_condition_ii(const RationalFunction& f);

AlphaResult solve_alpha(const RationalFunction& f);

ConditionIIIResult check_condition_iii(const RationalFunction& f);

Verdict decide(const RationalFunction& f);

/// Antiderivative with zero constant term.
Poly antiderivative(const Poly& p);

RationalFunction power_product(const std::vector<RationalPowerFactor>& factors);
KRationalFunction power_product(const std::vector<PowerFactor>& factors);

}  // namespace lpb
