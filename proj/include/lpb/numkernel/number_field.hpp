#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "lpb/numkernel/upoly.hpp"

namespace lpb {

/// Simple extension Q[z]/(m(z)) for a monic irreducible m.
class NumberField {
 public:
  /// Normalizes m to monic. Throws InvalidInput if deg m < 1 or m is not squarefree.
  /// Irreducibility is the caller's contract (factor_over_Q produces valid inputs).
  static std::shared_ptr<const NumberField> create(const Poly& minpoly);

  const Poly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  Poly reduce(const Poly& p) const { return p % minpoly_; }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.minpoly_ == b.minpoly_; }

 private:
  explicit NumberField(Poly minpoly) : minpoly_(std::move(minpoly)) {}
  Poly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in power-basis coordinates.
///
/// An element without a field is a plain rational; it combines with elements of any field,
/// which lets polynomial code use T() and T(Rational) as constants. Mixing elements of two
/// different fields throws InvalidInput.
class NumberFieldElement {
 public:
  NumberFieldElement() = default;
  NumberFieldElement(const Rational& r) : value_(r) {}  // NOLINT(google-explicit-constructor)
  NumberFieldElement(FieldPtr field, const Poly& representative);

  static NumberFieldElement generator(FieldPtr field);
  static NumberFieldElement from_coords(FieldPtr field, const std::vector<Rational>& coords);

  const FieldPtr& field() const { return field_; }
  /// Power-basis coordinates, length deg(minpoly) (length 1 without a field).
  std::vector<Rational> coords() const;
  /// Reduced representative in Q[z], degree < deg(minpoly).
  const Poly& representative() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
  friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b);
  NumberFieldElement operator-() const { return NumberFieldElement(field_, -value_, raw_tag{}); }
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);
  friend bool operator!=(const NumberFieldElement& a, const NumberFieldElement& b) { return !(a == b); }

 private:
  struct raw_tag {};
  NumberFieldElement(FieldPtr field, Poly reduced, raw_tag) : field_(std::move(field)), value_(std::move(reduced)) {}
  static FieldPtr common_field(const NumberFieldElement& a, const NumberFieldElement& b);

  FieldPtr field_;
  Poly value_;
};

using KPoly = UPoly<NumberFieldElement>;

inline bool is_zero(const NumberFieldElement& u) { return u.is_zero(); }

/// Multiplicative inverse modulo the minimal polynomial; throws DivisionByZero on zero.
NumberFieldElement nf_invert(const NumberFieldElement& u);

/// The constant coordinate iff all higher coordinates vanish.
std::optional<Rational> nf_is_rational(const NumberFieldElement& u);

/// Coefficient-wise embedding Q[x] -> K[x].
KPoly to_kpoly(const Poly& p);

/// Inverse of to_kpoly; empty when some coefficient is irrational.
std::optional<Poly> to_rational_poly(const KPoly& p);

/// First field found among the coefficients, or null.
FieldPtr field_of(const KPoly& p);

/// Takes the Q[x] route when every coefficient is rational.
template <>
KPoly gcd(KPoly a, KPoly b);

}  // namespace lpb
