#include "lpb/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "lpb/numkernel/resultant.hpp"

namespace lpb {

namespace {

using Complex = std::complex<long double>;

Real real_abs(Real v) { return v < 0 ? -v : v; }
bool real_finite(Real v) { return v - v == 0; }

std::vector<Real> real_coeffs(const Poly& p) {
  std::vector<Real> c;
  for (const Rational& r : p.coeffs()) c.push_back(to_real(r));
  return c;
}

Real horner(const std::vector<Real>& c, Real x) {
  Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex horner(const std::vector<Complex>& c, Complex x) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> complex_coeffs(const Poly& p) {
  std::vector<Complex> c;
  for (const Rational& r : p.coeffs()) c.emplace_back(static_cast<long double>(to_real(r)), 0.0L);
  return c;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long double>(i));
  return d;
}

// Simultaneous Aberth iteration on a squarefree polynomial
std::vector<Complex> aberth_roots(const Poly& p) {
  const Poly m = monic(p);
  const int n = m.degree();
  if (n < 1) return {};
  const std::vector<Complex> c = complex_coeffs(m);
  const std::vector<Complex> dc = derivative(c);

  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]));
  radius = std::min(1.0L + radius, 1e6L);
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) z.push_back(std::polar(radius, 6.283185307179586L * k / n + 0.4L));

  constexpr int max_iterations = 2000;
  for (int iter = 0; iter < max_iterations; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const Complex pv = horner(c, z[kk]);
      if (pv == Complex(0)) continue;
      const Complex ratio = pv / horner(dc, z[kk]);
      Complex sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += 1.0L / (z[kk] - z[static_cast<std::size_t>(j)]);
      const Complex step = ratio / (1.0L - ratio * sum);
      z[kk] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[kk])));
    }
    if (worst <= 1e-12L) {
      for (auto& root : z)
        for (int polish = 0; polish < 3; ++polish) {
          const Complex d = horner(dc, root);
          if (d == Complex(0)) break;
          root -= horner(c, root) / d;
        }
      return z;
    }
  }
  throw NumericFailure("root iteration did not converge");
}

}  // namespace

Real to_real(const Rational& r) {
  mpf_class v(r, 256);
  Real sum = 0;
  for (int part = 0; part < 3; ++part) {
    const double d = v.get_d();
    sum += d;
    v -= d;
  }
  return sum;
}

double to_double(Real v) { return static_cast<double>(v); }

std::vector<Real> real_roots(const Poly& p) {
  if (p.is_constant()) return {};
  const Poly sq = squarefree_part(p);
  const std::vector<Real> c = real_coeffs(sq);
  const std::vector<Real> dc = real_coeffs(sq.derivative());
  std::vector<Real> out;
  for (const Complex& z : aberth_roots(sq)) {
    if (std::abs(z.imag()) > 1e-7L * (1.0L + std::abs(z.real()))) continue;
    Real x = z.real();
    for (int i = 0; i < 8; ++i) {
      const Real d = horner(dc, x);
      if (d == 0) break;
      x -= horner(c, x) / d;
    }
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Real RealEmbedding::operator()(const NumberFieldElement& u) {
  if (!u.field()) return to_real(u.representative().coeff(0));
  std::vector<std::string> key;
  for (const Rational& r : u.field()->minpoly().coeffs()) key.push_back(to_string(r));
  auto it = roots_.find(key);
  if (it == roots_.end()) {
    const std::vector<Real> roots = real_roots(u.field()->minpoly());
    if (roots.empty()) throw NumericFailure("number field has no real embedding");
    it = roots_.emplace(std::move(key), roots.front()).first;
  }
  return horner(real_coeffs(u.representative()), it->second);
}

Trajectory rk4_flow(const ExtendedDerivation& der, const TrajectoryConfig& cfg) {
  if (!(cfg.step > 0) || !(cfg.horizon > 0) || !(cfg.margin >= 0) || !(cfg.magnitude_bound > 0))
    throw InvalidInput("trajectory needs positive step, horizon and bound and a nonnegative margin");
  if (der.f_den.is_zero()) throw InvalidInput("vector field with zero denominator");

  std::vector<Real> poles = real_roots(der.f_den);
  for (const Poly& d : cfg.avoid) {
    if (d.is_zero()) continue;
    for (Real r : real_roots(d)) poles.push_back(r);
  }
  const Real margin = cfg.margin;
  auto near_pole = [&](Real x) {
    return std::any_of(poles.begin(), poles.end(), [&](Real p) { return real_abs(x - p) < margin; });
  };

  TrajectorySample s0{0, to_real(cfg.x0), to_real(cfg.y0), to_real(cfg.t0), to_real(cfg.gamma1_0), to_real(cfg.gamma2_0)};
  if (near_pole(s0.x)) throw InvalidInput("initial point lies within the margin of a pole");

  RealEmbedding embed;
  const Real l1 = embed(der.lambda1);
  const Real l2 = embed(der.lambda2);
  const std::vector<Real> fn = real_coeffs(der.f_num);
  const std::vector<Real> fd = real_coeffs(der.f_den);

  struct State {
    Real x, y, t, g1, g2;
  };
  auto field = [&](const State& u) {
    return State{horner(fn, u.x) / horner(fd, u.x), u.x * u.y, 1, l1 * u.g1, l2 * u.g2};
  };
  auto axpy = [](const State& u, Real a, const State& k) {
    return State{u.x + a * k.x, u.y + a * k.y, u.t + a * k.t, u.g1 + a * k.g1, u.g2 + a * k.g2};
  };

  Trajectory traj;
  const auto steps = static_cast<long>(std::ceil(cfg.horizon / cfg.step - 1e-9));
  const Real h = Real(cfg.horizon) / Real(steps);
  traj.samples.reserve(static_cast<std::size_t>(steps + 1));
  traj.samples.push_back(s0);
  State u{s0.x, s0.y, s0.t, s0.gamma1, s0.gamma2};
  const Real bound = cfg.magnitude_bound;
  for (long i = 1; i <= steps; ++i) {
    const State k1 = field(u);
    const State k2 = field(axpy(u, h / 2, k1));
    const State k3 = field(axpy(u, h / 2, k2));
    const State k4 = field(axpy(u, h, k3));
    u = State{u.x + h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x), u.y + h / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y),
              u.t + h / 6 * (k1.t + 2 * k2.t + 2 * k3.t + k4.t), u.g1 + h / 6 * (k1.g1 + 2 * k2.g1 + 2 * k3.g1 + k4.g1),
              u.g2 + h / 6 * (k1.g2 + 2 * k2.g2 + 2 * k3.g2 + k4.g2)};
    const Real values[] = {u.x, u.y, u.t, u.g1, u.g2};
    if (!std::all_of(std::begin(values), std::end(values), [&](Real v) { return real_finite(v) && real_abs(v) <= bound; })) {
      traj.aborted = true;
      traj.abort_reason = "magnitude bound exceeded";
      break;
    }
    if (near_pole(u.x)) {
      traj.aborted = true;
      traj.abort_reason = "trajectory entered the pole margin";
      break;
    }
    traj.samples.push_back({h * Real(i), u.x, u.y, u.t, u.g1, u.g2});
  }
  return traj;
}

DriftReport conservation_check(const std::vector<ExtendedExpression>& phis, const Trajectory& traj) {
  DriftReport report;
  report.drift.assign(phis.size(), 0.0);
  if (traj.samples.empty()) return report;
  RealEmbedding embed;
  const std::function<Real(const NumberFieldElement&)> coeff = [&](const NumberFieldElement& u) { return embed(u); };
  auto eval = [&](const ExtendedExpression& e, const TrajectorySample& s) {
    return e.evaluate<Real>(s.x, s.y, s.t, s.gamma1, s.gamma2, coeff);
  };

  std::vector<Real> start;
  for (const auto& phi : phis) start.push_back(eval(phi, traj.samples.front()));
  for (const Real v : start)
    if (!real_finite(v)) throw NumericFailure("first integral undefined at the initial point");

  for (const auto& s : traj.samples) {
    std::vector<Real> values;
    bool ok = true;
    for (const auto& phi : phis) {
      values.push_back(eval(phi, s));
      ok = ok && real_finite(values.back());
    }
    if (!ok) {
      ++report.excluded_samples;
      continue;
    }
    for (std::size_t i = 0; i < phis.size(); ++i) {
      const Real scale = std::max(Real(1), real_abs(start[i]));
      report.drift[i] = std::max(report.drift[i], to_double(real_abs(values[i] - start[i]) / scale));
    }
  }
  for (double d : report.drift) report.max_drift = std::max(report.max_drift, d);
  return report;
}

DriftReport conservation_check(const FirstIntegralPair& pair, const Trajectory& traj) {
  return conservation_check(std::vector<ExtendedExpression>{pair.phi1, pair.phi2}, traj);
}

std::vector<Poly> certificate_denominators(const FirstIntegralPair& pair) {
  std::vector<Poly> out;
  for (const ExtendedExpression* e : {&pair.phi1, &pair.phi2}) {
    const KPoly& d = e->den();
    if (auto q = to_rational_poly(d)) {
      out.push_back(*q);
      continue;
    }
    // norm: Res_z(m(z), D(x, z)) with x as the coefficient variable
    const FieldPtr k = field_of(d);
    std::vector<Poly> m;
    for (const Rational& c : k->minpoly().coeffs()) m.push_back(Poly(c));
    std::vector<Poly> dz(static_cast<std::size_t>(k->degree()));
    for (int i = 0; i <= d.degree(); ++i) {
      const Poly rep = d.coeff(static_cast<std::size_t>(i)).representative();
      for (int j = 0; j <= rep.degree(); ++j)
        dz[static_cast<std::size_t>(j)] =
            dz[static_cast<std::size_t>(j)] + Poly::monomial(rep.coeff(static_cast<std::size_t>(j)), static_cast<std::size_t>(i));
    }
    out.push_back(resultant(BiPoly(std::move(m)), BiPoly(std::move(dz))));
  }
  return out;
}

std::vector<NumericResidue> numeric_residues(const RationalFunction& proper) {
  if (!proper.is_proper()) throw InvalidInput("residues need a proper rational function");
  if (!is_squarefree(proper.den())) throw InvalidInput("residues need a squarefree denominator");
  const std::vector<Complex> num = complex_coeffs(proper.num());
  const std::vector<Complex> dden = complex_coeffs(proper.den().derivative());
  std::vector<NumericResidue> out;
  for (const Complex& c : aberth_roots(proper.den())) out.push_back({c, horner(num, c) / horner(dden, c)});
  std::sort(out.begin(), out.end(), [](const NumericResidue& a, const NumericResidue& b) {
    return a.root.real() != b.root.real() ? a.root.real() < b.root.real() : a.root.imag() < b.root.imag();
  });
  return out;
}

double max_residue_error(const ResidueData& rd, const std::vector<NumericResidue>& numeric) {
  if (!residues_all_rational(rd)) throw InvalidInput("numeric comparison needs rational residues");
  double worst = 0;
  for (const auto& nr : numeric) {
    const RationalResidueGroup* best = nullptr;
    long double best_value = 0;
    for (const auto& g : rd.rational) {
      const long double v = std::abs(horner(complex_coeffs(g.factor), nr.root));
      if (!best || v < best_value) {
        best = &g;
        best_value = v;
      }
    }
    if (!best) throw InvalidInput("no residue group for a numeric root");
    const Complex symbolic(static_cast<long double>(to_real(best->residue)), 0.0L);
    worst = std::max(worst, static_cast<double>(std::abs(nr.residue - symbolic)));
  }
  return worst;
}

void write_csv(std::ostream& out, const Trajectory& traj, const std::vector<ExtendedExpression>& phis) {
  out << "s,x,y,t,gamma1,gamma2";
  for (std::size_t i = 0; i < phis.size(); ++i) out << ",phi" << (i + 1);
  out << "\n";
  RealEmbedding embed;
  const std::function<Real(const NumberFieldElement&)> coeff = [&](const NumberFieldElement& u) { return embed(u); };
  char buf[64];
  auto put = [&](Real v) {
    std::snprintf(buf, sizeof buf, "%.17g", to_double(v));
    out << buf;
  };
  for (const auto& s : traj.samples) {
    put(s.s);
    for (Real v : {s.x, s.y, s.t, s.gamma1, s.gamma2}) {
      out << ",";
      put(v);
    }
    for (const auto& phi : phis) {
      out << ",";
      put(phi.evaluate<Real>(s.x, s.y, s.t, s.gamma1, s.gamma2, coeff));
    }
    out << "\n";
  }
}

}  // namespace lpb
