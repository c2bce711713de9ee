#pragma once

#include <optional>
#include <vector>

#include "lpb/ratfield/rational_function.hpp"

namespace lpb {

/// All poles of `factor` (monic, over Q) carry the same rational residue.
struct RationalResidueGroup {
  Rational residue;
  Poly factor;
};

/// `residue` is the generator of a number field defined by an irreducible factor of the
/// squarefree resultant; `factor` holds the poles with that residue. The conjugate groups
/// are implied.
struct AlgebraicResidueGroup {
  NumberFieldElement residue;
  KPoly factor;
};

struct ResidueData {
  Poly numerator;
  Poly denominator;
  Poly rt_resultant;             // Res_x(den, num - z*den')
  Poly squarefree_resultant;     // monic
  std::vector<RationalResidueGroup> rational;    // ascending residue
  std::vector<AlgebraicResidueGroup> algebraic;  // one per irreducible nonlinear factor
};

/// Residues of a proper fraction with squarefree denominator. Throws InvalidInput when
/// the fraction is improper or its denominator has a repeated factor.
ResidueData rt_residues(const RationalFunction& proper);

bool residues_all_rational(const ResidueData& rd);

/// Sum of residue * factor'/factor over the rational groups.
RationalFunction residue_sum(const ResidueData& rd);

struct CommensurableGroup {
  NumberFieldElement residue;
  KPoly factor;
  Integer multiple;  // residue == scale * multiple
};

struct CommensurabilityWitness {
  NumberFieldElement scale;  // rational, or over the field of the first algebraic group
  std::vector<CommensurableGroup> groups;
};

/// Ratio resultant Res_y(R(y), z^d R(y/z)); its roots are all ratios of roots of R.
Poly ratio_resultant(const Poly& r);

/// Witness iff all residues are rational multiples of one number. Throws InvalidInput
/// when the squarefree resultant is constant.
std::optional<CommensurabilityWitness> residues_commensurable(const ResidueData& rd);

}  // namespace lpb
