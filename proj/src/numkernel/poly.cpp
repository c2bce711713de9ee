#include "lpb/numkernel/poly.hpp"

#include <algorithm>
#include <optional>

namespace lpb {

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd(a, b); }

std::vector<Integer> primitive_integer_coeffs(const Poly& a) {
  if (a.is_zero()) return {};
  Integer den_lcm = denominator_lcm(a.coeffs());
  std::vector<Integer> out;
  out.reserve(a.coeffs().size());
  Integer content = 0;
  for (const auto& c : a.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (sgn(out.back()) < 0) content = -content;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

Poly from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v);
  return Poly(std::move(c));
}

namespace {

constexpr unsigned long kTrialBound = 1ul << 16;
constexpr std::size_t kMaxCandidates = 100000;

// Prime factorization by trial division; empty when the cofactor cannot be certified prime.
std::optional<std::vector<std::pair<Integer, int>>> trial_factor(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  n = abs(n);
  for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) out.emplace_back(Integer(p), e);
  }
  if (n > 1) {
    // a composite cofactor would have a prime factor <= kTrialBound
    if (n > Integer(kTrialBound) * kTrialBound) return std::nullopt;
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<Integer> divisors(const std::vector<std::pair<Integer, int>>& pf) {
  std::vector<Integer> d{Integer(1)};
  for (const auto& [p, e] : pf) {
    const std::size_t base = d.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
    }
  }
  return d;
}

// q^n * F(p/q) = sum f_i p^i q^(n-i)
Integer homogeneous_value(const std::vector<Integer>& f, const Integer& p, const Integer& q) {
  const std::size_t n = f.size() - 1;
  std::vector<Integer> qpow(n + 1);
  qpow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) qpow[i] = qpow[i - 1] * q;
  Integer acc = f[n];
  for (std::size_t i = n; i-- > 0;) acc = acc * p + f[i] * qpow[n - i];
  return acc;
}

// Roots of a squarefree polynomial by divisor enumeration; empty optional when the
// trailing/leading coefficients are too large to enumerate.
std::optional<std::vector<Rational>> roots_by_divisors(const Poly& sqfree) {
  std::vector<Integer> f = primitive_integer_coeffs(sqfree);
  std::vector<Rational> roots;
  if (f.front() == 0) {
    roots.emplace_back(0);
    f.erase(f.begin());
  }
  if (f.size() <= 1) return roots;
  if (f.size() == 2) {
    roots.push_back(make_rational(-f[0], f[1]));
    return roots;
  }
  auto pa = trial_factor(f.front());
  auto pb = trial_factor(f.back());
  if (!pa || !pb) return std::nullopt;
  std::vector<Integer> ps = divisors(*pa);
  std::vector<Integer> qs = divisors(*pb);
  if (ps.size() * qs.size() > kMaxCandidates) return std::nullopt;
  std::size_t remaining = f.size() - 1;
  for (const auto& q : qs) {
    for (const auto& p : ps) {
      if (remaining == 0) break;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int s : {1, -1}) {
        Integer sp = s * p;
        if (homogeneous_value(f, sp, q) == 0) {
          roots.push_back(make_rational(sp, q));
          --remaining;
        }
      }
    }
  }
  return roots;
}

std::vector<Rational> squarefree_rational_roots(const Poly& sqfree) {
  if (auto r = roots_by_divisors(sqfree)) return *r;
  std::vector<Rational> roots;
  for (const auto& fac : factor_over_Q(sqfree))
    if (fac.poly.degree() == 1) roots.push_back(-fac.poly.coeff(0));
  return roots;
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& a) {
  if (a.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  std::vector<Rational> roots;
  for (const auto& part : squarefree_decompose(a).parts) {
    for (const auto& r : squarefree_rational_roots(part.poly))
      for (int k = 0; k < part.multiplicity; ++k) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

std::string monomial_text(std::size_t i, std::string_view var) {
  std::string out(var);
  if (i > 1) out += "^" + std::to_string(i);
  return out;
}

}  // namespace

std::string format_poly(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rational& c = p.coeffs()[i];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Rational mag = abs(c);
    if (i == 0)
      out += to_string(mag);
    else if (mag == 1)
      out += monomial_text(i, var);
    else
      out += to_string(mag) + "*" + monomial_text(i, var);
  }
  return out;
}

std::string format_nf(const NumberFieldElement& u, std::string_view field_var) {
  return format_poly(u.representative(), field_var);
}

std::string format_poly(const KPoly& p, std::string_view var, std::string_view field_var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const NumberFieldElement& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    if (auto r = nf_is_rational(c)) {
      const bool negative = sgn(*r) < 0;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      Rational mag = abs(*r);
      if (i == 0)
        out += to_string(mag);
      else if (mag == 1)
        out += monomial_text(i, var);
      else
        out += to_string(mag) + "*" + monomial_text(i, var);
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + format_nf(c, field_var) + ")";
      if (i > 0) out += "*" + monomial_text(i, var);
    }
  }
  return out;
}

}  // namespace lpb
