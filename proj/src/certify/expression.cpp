#include "lpb/certify/expression.hpp"

namespace lpb {

namespace {

KPoly kone() { return KPoly(NumberFieldElement(Rational(1))); }

Monomial add(const Monomial& a, const Monomial& b) { return {a.y + b.y, a.t + b.t, a.g1 + b.g1, a.g2 + b.g2}; }

void accumulate(std::map<Monomial, KPoly>& terms, const Monomial& m, const KPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) it->second = it->second + c;
}

std::string power_text(std::string_view var, int e) {
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto append = [&](std::string_view var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += power_text(var, e);
  };
  append("y", m.y);
  append("t", m.t);
  append("gamma1", m.g1);
  append("gamma2", m.g2);
  return s;
}

bool is_atom(const std::string& s) { return s.find_first_of(" +-*/()") == std::string::npos; }

}  // namespace

ExtendedExpression::ExtendedExpression(const KPoly& num, const KPoly& den, Monomial m) : den_(den) {
  if (den.is_zero()) throw DivisionByZero("expression with zero denominator");
  if (m.t < 0) throw InvalidInput("negative power of t");
  accumulate(terms_, m, num);
  normalize();
}

ExtendedExpression ExtendedExpression::constant(const NumberFieldElement& c) { return ExtendedExpression(KPoly(c), kone()); }

ExtendedExpression ExtendedExpression::generator(Generator g) {
  switch (g) {
    case Generator::X: return ExtendedExpression(KPoly::variable(), kone());
    case Generator::Y: return ExtendedExpression(kone(), kone(), {1, 0, 0, 0});
    case Generator::T: return ExtendedExpression(kone(), kone(), {0, 1, 0, 0});
    case Generator::Gamma1: return ExtendedExpression(kone(), kone(), {0, 0, 1, 0});
    case Generator::Gamma2: return ExtendedExpression(kone(), kone(), {0, 0, 0, 1});
  }
  throw InvalidInput("unknown generator");
}

ExtendedExpression ExtendedExpression::from_poly(const Poly& p) { return ExtendedExpression(to_kpoly(p), kone()); }

ExtendedExpression ExtendedExpression::from_fraction(const Poly& num, const Poly& den) {
  return ExtendedExpression(to_kpoly(num), to_kpoly(den));
}

void ExtendedExpression::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  if (terms_.empty()) {
    den_ = kone();
    return;
  }
  KPoly g = den_;
  for (const auto& [m, c] : terms_) {
    if (g.is_constant()) break;
    g = gcd(g, c);
  }
  if (!g.is_constant()) {
    den_ = exact_quotient(den_, g);
    for (auto& [m, c] : terms_) c = exact_quotient(c, g);
  }
  const NumberFieldElement inv = NumberFieldElement(Rational(1)) / den_.lc();
  den_ = den_ * inv;
  for (auto& [m, c] : terms_) c = c * inv;
}

bool ExtendedExpression::mentions(Generator g) const {
  for (const auto& [m, c] : terms_) {
    switch (g) {
      case Generator::X:
        if (!c.is_constant()) return true;
        break;
      case Generator::Y:
        if (m.y != 0) return true;
        break;
      case Generator::T:
        if (m.t != 0) return true;
        break;
      case Generator::Gamma1:
        if (m.g1 != 0) return true;
        break;
      case Generator::Gamma2:
        if (m.g2 != 0) return true;
        break;
    }
  }
  return g == Generator::X && !is_zero() && !den_.is_constant();
}

ExtendedExpression operator+(const ExtendedExpression& a, const ExtendedExpression& b) {
  ExtendedExpression r;
  if (a.den_ == b.den_) {
    r.den_ = a.den_;
    r.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) accumulate(r.terms_, m, c);
  } else {
    const KPoly g = gcd(a.den_, b.den_);
    const KPoly ca = exact_quotient(b.den_, g);
    const KPoly cb = exact_quotient(a.den_, g);
    r.den_ = a.den_ * ca;
    for (const auto& [m, c] : a.terms_) accumulate(r.terms_, m, c * ca);
    for (const auto& [m, c] : b.terms_) accumulate(r.terms_, m, c * cb);
  }
  r.normalize();
  return r;
}

ExtendedExpression ExtendedExpression::operator-() const {
  ExtendedExpression r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

ExtendedExpression operator-(const ExtendedExpression& a, const ExtendedExpression& b) { return a + (-b); }

ExtendedExpression operator*(const ExtendedExpression& a, const ExtendedExpression& b) {
  ExtendedExpression r;
  r.den_ = a.den_ * b.den_;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) accumulate(r.terms_, add(ma, mb), ca * cb);
  r.normalize();
  return r;
}

ExtendedExpression operator/(const ExtendedExpression& a, const ExtendedExpression& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero expression");
  if (!b.is_single_term()) throw InvalidInput("division is supported only by single-term expressions");
  const auto& [mb, cb] = *b.terms_.begin();
  if (mb.t != 0) throw InvalidInput("division by a power of t");
  ExtendedExpression r;
  r.den_ = a.den_ * cb;
  const Monomial inv{-mb.y, 0, -mb.g1, -mb.g2};
  for (const auto& [m, c] : a.terms_) accumulate(r.terms_, add(m, inv), c * b.den_);
  r.normalize();
  return r;
}

bool operator==(const ExtendedExpression& a, const ExtendedExpression& b) { return (a - b).is_zero(); }

ExtendedExpression ExtendedExpression::pow(long n) const {
  if (n < 0) return constant(NumberFieldElement(Rational(1))) / pow(-n);
  ExtendedExpression result = constant(NumberFieldElement(Rational(1)));
  ExtendedExpression base = *this;
  auto e = static_cast<unsigned long>(n);
  while (e) {
    if (e & 1ul) result = result * base;
    e >>= 1ul;
    if (e) base = base * base;
  }
  return result;
}

ExtendedExpression ExtendedExpression::partial_x() const {
  ExtendedExpression r;
  const KPoly dd = den_.derivative();
  r.den_ = den_ * den_;
  for (const auto& [m, c] : terms_) accumulate(r.terms_, m, c.derivative() * den_ - c * dd);
  r.normalize();
  return r;
}

ExtendedExpression ExtendedExpression::partial_y() const {
  ExtendedExpression r;
  r.den_ = den_;
  for (const auto& [m, c] : terms_) {
    if (m.y == 0) continue;
    accumulate(r.terms_, {m.y - 1, m.t, m.g1, m.g2}, c * NumberFieldElement(Rational(m.y)));
  }
  r.normalize();
  return r;
}

std::string ExtendedExpression::to_string() const {
  if (is_zero()) return "0";
  std::string num;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m);
    std::string coef = format_poly(c, "x", "z");
    std::string sign;
    if (coef.front() == '-' && is_atom(coef.substr(1))) {
      sign = "-";
      coef.erase(0, 1);
    }
    std::string term;
    if (mono.empty()) {
      term = terms_.size() == 1 || is_atom(coef) ? coef : "(" + coef + ")";
    } else if (coef == "1") {
      term = mono;
    } else {
      term = (is_atom(coef) ? coef : "(" + coef + ")") + "*" + mono;
    }
    term = sign + term;
    if (num.empty()) {
      num = term;
    } else if (term.front() == '-') {
      num += " - " + term.substr(1);
    } else {
      num += " + " + term;
    }
  }
  if (den_.is_constant()) return num;
  return "(" + num + ")/(" + format_poly(den_, "x", "z") + ")";
}

ExtendedExpression lie_derivative(const ExtendedExpression& e, const ExtendedDerivation& der) {
  // d(N/D) = (M*D - N*D'*fn) / (fd*D^2), where d(N) = M/fd
  const KPoly fn = to_kpoly(der.f_num);
  const KPoly fd = to_kpoly(der.f_den);
  const KPoly x = KPoly::variable();
  const KPoly& d = e.den();
  const KPoly dd = d.derivative();
  ExtendedExpression sum;
  for (const auto& [m, c] : e.terms()) {
    const KPoly weight = x * NumberFieldElement(Rational(m.y)) +
                         KPoly(der.lambda1 * NumberFieldElement(Rational(m.g1)) +
                               der.lambda2 * NumberFieldElement(Rational(m.g2)));
    const KPoly mc = c.derivative() * fn + c * weight * fd;
    sum = sum + ExtendedExpression(mc * d - c * dd * fn, fd * d * d, m);
    if (m.t > 0)
      sum = sum + ExtendedExpression(c * fd * d * NumberFieldElement(Rational(m.t)), fd * d * d, {m.y, m.t - 1, m.g1, m.g2});
  }
  return sum;
}

}  // namespace lpb
