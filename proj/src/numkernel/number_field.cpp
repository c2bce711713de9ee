#include "lpb/numkernel/number_field.hpp"

namespace lpb {

FieldPtr NumberField::create(const Poly& minpoly) {
  if (minpoly.degree() < 1) throw InvalidInput("number field minimal polynomial must have degree >= 1");
  Poly m = monic(minpoly);
  if (gcd(m, m.derivative()).degree() > 0) throw InvalidInput("number field minimal polynomial is not squarefree");
  return FieldPtr(new NumberField(std::move(m)));
}

NumberFieldElement::NumberFieldElement(FieldPtr field, const Poly& representative) : field_(std::move(field)) {
  value_ = field_ ? field_->reduce(representative) : representative;
  if (!field_ && value_.degree() > 0) throw InvalidInput("non-constant representative without a number field");
}

NumberFieldElement NumberFieldElement::generator(FieldPtr field) {
  if (!field) throw InvalidInput("generator requires a number field");
  return NumberFieldElement(field, Poly::variable());
}

NumberFieldElement NumberFieldElement::from_coords(FieldPtr field, const std::vector<Rational>& coords) {
  if (field && static_cast<int>(coords.size()) != field->degree())
    throw InvalidInput("coordinate count does not match field degree");
  return NumberFieldElement(std::move(field), Poly(coords));
}

std::vector<Rational> NumberFieldElement::coords() const {
  const std::size_t n = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = value_.coeff(i);
  return c;
}

FieldPtr NumberFieldElement::common_field(const NumberFieldElement& a, const NumberFieldElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (!(*a.field_ == *b.field_)) throw InvalidInput("arithmetic between different number fields");
  return a.field_;
}

NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
  return NumberFieldElement(NumberFieldElement::common_field(a, b), a.value_ + b.value_, NumberFieldElement::raw_tag{});
}

NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
  return NumberFieldElement(NumberFieldElement::common_field(a, b), a.value_ - b.value_, NumberFieldElement::raw_tag{});
}

NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
  FieldPtr f = NumberFieldElement::common_field(a, b);
  Poly prod = a.value_ * b.value_;
  if (f && prod.degree() >= f->degree()) prod = f->reduce(prod);
  return NumberFieldElement(std::move(f), std::move(prod), NumberFieldElement::raw_tag{});
}

NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) { return a * nf_invert(b); }

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.value_ == b.value_;
}

NumberFieldElement nf_invert(const NumberFieldElement& u) {
  if (u.is_zero()) throw DivisionByZero("inverse of zero number-field element");
  if (!u.field()) return NumberFieldElement(Rational(1) / u.representative().lc());
  Bezout<Rational> e = extended_gcd(u.representative(), u.field()->minpoly());
  if (e.g.degree() != 0) throw DivisionByZero("element is a zero divisor; minimal polynomial is reducible");
  return NumberFieldElement(u.field(), e.s);
}

std::optional<Rational> nf_is_rational(const NumberFieldElement& u) {
  if (u.representative().degree() > 0) return std::nullopt;
  return u.representative().coeff(0);
}

KPoly to_kpoly(const Poly& p) {
  return p.map<NumberFieldElement>([](const Rational& c) { return NumberFieldElement(c); });
}

std::optional<Poly> to_rational_poly(const KPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& e : p.coeffs()) {
    auto r = nf_is_rational(e);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return Poly(std::move(c));
}

FieldPtr field_of(const KPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.field()) return c.field();
  return nullptr;
}

template <>
KPoly gcd(KPoly a, KPoly b) {
  auto ra = to_rational_poly(a);
  auto rb = to_rational_poly(b);
  if (ra && rb) return to_kpoly(gcd(std::move(*ra), std::move(*rb)));
  return euclid_gcd(std::move(a), std::move(b));
}

}  // namespace lpb
