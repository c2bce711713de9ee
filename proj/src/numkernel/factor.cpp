// Factorization over Q: squarefree decomposition, then for each squarefree part a
// small-prime Cantor-Zassenhaus factorization, linear Hensel lifting of the modular
// factors, and exhaustive recombination of lifted factors (Zassenhaus).

#include <algorithm>
#include <cstdint>
#include <random>

#include "lpb/numkernel/poly.hpp"

namespace lpb {

namespace {

using u64 = std::uint64_t;
using ZpPoly = std::vector<u64>;  // ascending, trimmed

struct Zp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  static void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  static int deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

  ZpPoly reduce(const std::vector<Integer>& f) const {
    ZpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer m;
      mpz_fdiv_r_ui(m.get_mpz_t(), f[i].get_mpz_t(), p);
      r[i] = m.get_ui();
    }
    trim(r);
    return r;
  }

  ZpPoly sub(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ZpPoly add(const ZpPoly& a, const ZpPoly& b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  ZpPoly mul(const ZpPoly& a, const ZpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
  }
  ZpPoly scale(ZpPoly a, u64 s) const {
    for (auto& c : a) c = mul(c, s);
    trim(a);
    return a;
  }
  std::pair<ZpPoly, ZpPoly> divmod(const ZpPoly& a, const ZpPoly& b) const {
    if (deg(a) < deg(b)) return {{}, a};
    ZpPoly r = a;
    ZpPoly q(a.size() - b.size() + 1, 0);
    const u64 il = inv(b.back());
    for (int i = deg(a); i >= deg(b); --i) {
      const u64 c = mul(r[static_cast<std::size_t>(i)], il);
      if (c == 0) continue;
      q[static_cast<std::size_t>(i - deg(b))] = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto& slot = r[static_cast<std::size_t>(i - deg(b)) + j];
        slot = sub(slot, mul(c, b[j]));
      }
    }
    trim(q);
    r.resize(b.size() - 1);
    trim(r);
    return {q, r};
  }
  ZpPoly rem(const ZpPoly& a, const ZpPoly& b) const { return divmod(a, b).second; }
  ZpPoly monic(ZpPoly a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  ZpPoly gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
      ZpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  ZpPoly derivative(const ZpPoly& a) const {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
  ZpPoly powmod(ZpPoly base, const Integer& e, const ZpPoly& mod) const {
    ZpPoly r{1};
    base = rem(base, mod);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), mod);
      if (mpz_tstbit(e.get_mpz_t(), i) != 0) r = rem(mul(r, base), mod);
    }
    return r;
  }

  // Distinct-degree factorization of a monic squarefree polynomial.
  std::vector<std::pair<ZpPoly, int>> distinct_degree(ZpPoly f) const {
    std::vector<std::pair<ZpPoly, int>> out;
    const ZpPoly x{0, 1};
    ZpPoly h = x;
    for (int i = 1; 2 * i <= deg(f); ++i) {
      h = powmod(h, Integer(p), f);
      ZpPoly g = gcd(sub(h, x), f);
      if (deg(g) > 0) {
        out.emplace_back(g, i);
        f = divmod(f, g).first;
        h = rem(h, f);
      }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
  }

  // Cantor-Zassenhaus equal-degree splitting (p odd).
  void equal_degree(const ZpPoly& f, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) const {
    if (deg(f) == d) {
      out.push_back(monic(f));
      return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (;;) {
      ZpPoly a(static_cast<std::size_t>(deg(f)));
      for (auto& c : a) c = dist(rng);
      trim(a);
      if (deg(a) < 1) continue;
      ZpPoly b = sub(powmod(a, e, f), ZpPoly{1});
      ZpPoly g = gcd(b, f);
      if (deg(g) > 0 && deg(g) < deg(f)) {
        equal_degree(g, d, rng, out);
        equal_degree(divmod(f, g).first, d, rng, out);
        return;
      }
    }
  }
};

Integer symmetric_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

using ZPoly = std::vector<Integer>;  // integer coefficients, ascending

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly from_zp(const ZpPoly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Lifts F == g*h (mod p), g monic, to F == G*H (mod p^a).  F is only used modulo p^a.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& F, const ZpPoly& g, const ZpPoly& h, const Zp& zp, int a) {
  // s*g + t*h == 1 (mod p)
  ZpPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = zp.divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZpPoly s2 = zp.sub(s0, zp.mul(q, s1));
    ZpPoly t2 = zp.sub(t0, zp.mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 il = zp.inv(r0.front());
  const ZpPoly s = zp.scale(s0, il);
  const ZpPoly t = zp.scale(t0, il);

  ZPoly G = from_zp(g);
  ZPoly H = from_zp(h);
  Integer pk = zp.p;
  for (int k = 1; k < a; ++k) {
    ZPoly diff = F;
    ZPoly gh = zmul(G, H);
    diff.resize(std::max(diff.size(), gh.size()), Integer(0));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    ztrim(diff);
    const ZpPoly e = zp.reduce(diff);
    auto [q, dg] = zp.divmod(zp.mul(t, e), g);
    const ZpPoly dh = zp.add(zp.mul(s, e), zp.mul(q, h));
    const Integer next = pk * zp.p;
    for (std::size_t i = 0; i < dg.size(); ++i) {
      if (G.size() <= i) G.resize(i + 1, Integer(0));
      G[i] += pk * static_cast<unsigned long>(dg[i]);
    }
    for (std::size_t i = 0; i < dh.size(); ++i) {
      if (H.size() <= i) H.resize(i + 1, Integer(0));
      H[i] += pk * static_cast<unsigned long>(dh[i]);
    }
    G = zmod(G, next);
    H = zmod(H, next);
    pk = next;
  }
  return {G, H};
}

// Lifts all modular factors of F (F == lc * prod factors mod p) to monic factors mod p^a.
void multi_lift(const ZPoly& F, const std::vector<ZpPoly>& factors, const Zp& zp, int a, const Integer& pa,
                std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    // monic associate of F modulo p^a
    Integer inv;
    mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), pa.get_mpz_t());
    ZPoly m = F;
    for (auto& c : m) c *= inv;
    out.push_back(zmod(m, pa));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<ZpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<ZpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  ZpPoly g{1}, h{1};
  for (const auto& f : left) g = zp.mul(g, f);
  for (const auto& f : right) h = zp.mul(h, f);
  h = zp.scale(h, zp.reduce({F.back()}).front());
  auto [G, H] = hensel_lift(F, g, h, zp, a);
  multi_lift(G, left, zp, a, pa, out);
  multi_lift(H, right, zp, a, pa, out);
}

ZPoly primitive(ZPoly a) {
  Integer c = 0;
  for (const auto& v : a) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
  if (a.back() < 0) c = -c;
  for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return a;
}

// Exact quotient a / b over Z, if it exists.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  const long db = static_cast<long>(b.size()) - 1;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  for (long i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    auto& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t()) == 0) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(c);
  }
  for (long i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  ztrim(q);
  return q;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

constexpr u64 kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,  53,  59,  61,  67,  71,  73,
                            79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
                            173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263};

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 1.
std::vector<ZPoly> zassenhaus(const ZPoly& F) {
  const int n = static_cast<int>(F.size()) - 1;
  if (n <= 1) return {F};

  // prime selection: a few admissible primes, keep the one with the fewest modular factors
  const Zp* best = nullptr;
  Zp candidates[5];
  std::vector<std::pair<ZpPoly, int>> best_ddf;
  std::size_t best_count = 0;
  int found = 0;
  for (u64 p : kPrimes) {
    if (found == 5) break;
    Zp zp{p};
    ZpPoly fp = zp.reduce(F);
    if (Zp::deg(fp) != n) continue;
    if (Zp::deg(zp.gcd(fp, zp.derivative(fp))) > 0) continue;
    auto ddf = zp.distinct_degree(zp.monic(fp));
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += static_cast<std::size_t>(Zp::deg(g) / d);
    candidates[found] = zp;
    if (best == nullptr || count < best_count) {
      best = &candidates[found];
      best_ddf = ddf;
      best_count = count;
    }
    ++found;
    if (count == 1) break;
  }
  if (best == nullptr) throw NumericFailure("no admissible prime for factorization");
  if (best_count == 1) return {F};
  const Zp zp = *best;

  std::mt19937_64 rng(0x5eedULL);
  std::vector<ZpPoly> modular;
  for (const auto& [g, d] : best_ddf) zp.equal_degree(g, d, rng, modular);

  // coefficient bound for any factor scaled to leading coefficient lc(F)
  Integer norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = norm * (n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * n));
  bound *= abs(F.back());
  int a = 1;
  Integer pa = zp.p;
  while (pa <= 2 * bound) {
    pa *= zp.p;
    ++a;
  }

  std::vector<ZPoly> lifted;
  multi_lift(F, modular, zp, a, pa, lifted);

  std::vector<ZPoly> result;
  ZPoly current = F;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool progressed = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    do {
      ZPoly candidate{current.back()};
      for (std::size_t i : idx) candidate = zmod(zmul(candidate, lifted[i]), pa);
      for (auto& c : candidate) c = symmetric_mod(c, pa);
      ztrim(candidate);
      if (candidate.size() < 2) continue;
      ZPoly g = primitive(candidate);
      if (auto q = zdivide(current, g)) {
        result.push_back(g);
        current = *q;
        for (std::size_t k = subset; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        progressed = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!progressed) ++subset;
  }
  if (current.size() > 1) result.push_back(primitive(current));
  return result;
}

}  // namespace

std::vector<Factor> factor_over_Q(const Poly& a) {
  if (a.is_zero()) throw InvalidInput("factorization of the zero polynomial");
  std::vector<Factor> out;
  for (const auto& part : squarefree_decompose(a).parts) {
    std::vector<Integer> f = primitive_integer_coeffs(part.poly);
    if (f.front() == 0) {
      out.push_back({Poly::variable(), part.multiplicity});
      f.erase(f.begin());
    }
    if (f.size() <= 1) continue;
    for (const auto& g : zassenhaus(f)) out.push_back({monic(from_integers(g)), part.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Factor& l, const Factor& r) {
    if (l.poly.degree() != r.poly.degree()) return l.poly.degree() < r.poly.degree();
    const auto& lc = l.poly.coeffs();
    const auto& rc = r.poly.coeffs();
    return std::lexicographical_compare(lc.rbegin(), lc.rend(), rc.rbegin(), rc.rend());
  });
  return out;
}

}  // namespace lpb
