#include <cstdint>

#include "lpb/numkernel/poly.hpp"

namespace lpb {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // ascending, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModPoly reduce(const std::vector<Integer>& a, u64 p) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim(out);
  return out;
}

// a mod b in place; b nonempty and monic
void rem_monic(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const u64 q = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (q)
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = (a[shift + j] + (p - q) * b[j] % p) % p;
    a.pop_back();
    trim(a);
  }
  trim(a);
}

void make_monic(ModPoly& a, u64 p) {
  const u64 inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  if (b.empty()) std::swap(a, b);
  make_monic(b, p);
  while (!a.empty()) {
    rem_monic(a, b, p);
    std::swap(a, b);
    if (!b.empty()) make_monic(b, p);
  }
  return a.empty() ? b : a;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

}  // namespace

// Small-primes modular gcd of the primitive integer parts, accepted once the CRT image
// stops changing and divides both inputs.
template <>
Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return Poly(Rational(1));

  const std::vector<Integer> ia = primitive_integer_coeffs(a);
  const std::vector<Integer> ib = primitive_integer_coeffs(b);
  Integer lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), ia.back().get_mpz_t(), ib.back().get_mpz_t());

  std::vector<Integer> image;  // symmetric residues modulo `modulus`
  Integer modulus = 0;
  int degree = std::min(a.degree(), b.degree()) + 1;
  Integer prime = Integer(1) << 31;
  for (;;) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 p = prime.get_ui();
    if (mpz_divisible_ui_p(ia.back().get_mpz_t(), p) || mpz_divisible_ui_p(ib.back().get_mpz_t(), p)) continue;
    ModPoly g = gcd_mod(reduce(ia, p), reduce(ib, p), p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg == 0) return Poly(Rational(1));
    if (dg > degree) continue;
    const u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
    for (auto& c : g) c = c * scale % p;

    if (dg < degree) {
      degree = dg;
      modulus = prime;
      image.assign(g.size(), Integer());
      for (std::size_t i = 0; i < g.size(); ++i) {
        image[i] = g[i];
        if (2 * g[i] > p) image[i] -= prime;
      }
      continue;
    }

    const Integer next_modulus = modulus * prime;
    const Integer half = next_modulus / 2;
    const u64 m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    bool changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const u64 h_mod = mpz_fdiv_ui(image[i].get_mpz_t(), p);
      const u64 t = (g[i] + p - h_mod) % p * m_inv % p;
      if (t == 0) continue;
      Integer v = image[i] + modulus * t;
      if (v > half) v -= next_modulus;
      changed = changed || v != image[i];
      image[i] = std::move(v);
    }
    modulus = next_modulus;
    if (changed) continue;

    const Poly candidate = monic(from_integers(image));
    if (divides(candidate, a) && divides(candidate, b)) return candidate;
  }
}

}  // namespace lpb
