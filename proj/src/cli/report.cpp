#include "lpb/cli/report.hpp"

#include "lpb/cli/parser.hpp"

namespace lpb {

namespace {

std::string field_text(const FieldPtr& k) { return format_poly(k->minpoly(), "z"); }

Json factors_json(const std::vector<RationalPowerFactor>& factors) {
  Json out = Json::array();
  for (const auto& pf : factors) out.push_back({{"factor", format_poly(pf.factor)}, {"exponent", pf.exponent.get_str()}});
  return out;
}

Json factors_json(const std::vector<PowerFactor>& factors) {
  Json out = Json::array();
  for (const auto& pf : factors)
    out.push_back({{"factor", format_poly(pf.factor, "x", "z")}, {"exponent", pf.exponent.get_str()}});
  return out;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("report is missing '") + key + "'");
  return j.at(key);
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw MalformedInput(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

bool require_bool(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_boolean()) throw MalformedInput(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

template <class Fn>
auto malformed_on_error(const std::string& what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedInput("cannot read " + what + ": " + e.what());
  }
}

Rational rational_field(const Json& j, const char* key) {
  const std::string s = require_string(j, key);
  return malformed_on_error(key, [&] { return parse_rational(s); });
}

Integer integer_field(const Json& j, const char* key) {
  const Rational r = rational_field(j, key);
  if (!is_integer(r)) throw MalformedInput(std::string("'") + key + "' must be an integer");
  return r.get_num();
}

ExtendedExpression expression_field(const Json& j, const char* key, const FieldPtr& field) {
  const std::string s = require_string(j, key);
  return malformed_on_error(key, [&] { return parse_extended_expression(s, field); });
}

ExtendedExpression factor_product(const Json& factors, const FieldPtr& field) {
  if (!factors.is_array()) throw MalformedInput("factor list must be an array");
  ExtendedExpression out = ExtendedExpression::constant(Rational(1));
  for (const Json& pf : factors) {
    const ExtendedExpression base = expression_field(pf, "factor", field);
    const Integer n = integer_field(pf, "exponent");
    if (!n.fits_slong_p()) throw MalformedInput("exponent out of range");
    out = out * malformed_on_error("factor", [&] { return base.pow(n.get_si()); });
  }
  return out;
}

}  // namespace

Json number_json(const NumberFieldElement& u) {
  if (!u.field()) return to_string(u.representative().coeff(0));
  Json coords = Json::array();
  for (const Rational& c : u.coords()) coords.push_back(to_string(c));
  return {{"minpoly", field_text(u.field())}, {"coords", coords}};
}

NumberFieldElement number_from_json(const Json& j, FieldPtr& field) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    return malformed_on_error("number", [&] { return NumberFieldElement(parse_rational(s)); });
  }
  const std::string minpoly = require_string(j, "minpoly");
  const Json& coords = require(j, "coords");
  if (!coords.is_array()) throw MalformedInput("'coords' must be an array");
  return malformed_on_error("number-field value", [&] {
    const Poly m = parse_polynomial(minpoly, "z");
    if (!field) {
      field = NumberField::create(m);
    } else if (!(field->minpoly() == monic(m))) {
      throw MalformedInput("number-field values over different fields");
    }
    std::vector<Rational> c;
    for (const Json& v : coords) {
      if (!v.is_string()) throw MalformedInput("coordinates must be strings");
      c.push_back(parse_rational(v.get<std::string>()));
    }
    return NumberFieldElement::from_coords(field, c);
  });
}

Json verdict_json(const std::string& input, const RationalFunction& f, const Verdict& v) {
  Json j;
  j["input"] = input;
  j["f"] = {{"text", format_rf(f)}, {"num", format_poly(f.num())}, {"den", format_poly(f.den())}};
  j["internal"] = v.internal;
  j["condition_i"] = {{"holds", v.cond_i}};

  Json ii;
  ii["holds"] = v.cond_i && holds(v.cond_ii);
  if (!v.cond_i) {
    ii["reasons"] = {{"derivative_branch", "zero-function"}, {"log_branch", "zero-function"}};
  } else if (const auto* d = std::get_if<DerivativeWitness>(&v.cond_ii)) {
    ii["branch"] = "derivative";
    ii["g"] = to_expression(d->g).to_string();
  } else if (const auto* l = std::get_if<LogDerivativeWitness>(&v.cond_ii)) {
    ii["branch"] = "log-derivative";
    ii["c"] = number_json(l->c);
    ii["g"] = to_expression(l->g).to_string();
    ii["g_factors"] = factors_json(l->g);
  } else {
    const auto& fails = std::get<RosenlichtFails>(v.cond_ii);
    ii["reasons"] = {{"derivative_branch", reason_name(fails.derivative_branch)},
                     {"log_branch", reason_name(fails.log_branch)}};
  }
  j["condition_ii"] = ii;

  Json iii;
  iii["holds"] = v.cond_iii.holds();
  if (const auto& w = v.cond_iii.witness) {
    iii["k"] = w->k.get_str();
    iii["e"] = to_string(w->e);
    iii["alpha"] = to_string(w->alpha);
    iii["alpha_free"] = w->alpha_free;
    iii["h"] = to_expression(w->h).to_string();
    iii["h_factors"] = factors_json(w->h);
  } else {
    iii["reason"] = reason_name(v.cond_iii.failure);
  }
  j["condition_iii"] = iii;
  return j;
}

void add_certificates(Json& report, const RationalFunction& f, const Verdict& v) {
  const FirstIntegralPair pair = build_first_integrals(f, v);
  Json uses = Json::array();
  if (pair.uses_t) uses.push_back("t");
  if (pair.uses_gamma1) uses.push_back("gamma1");
  if (pair.uses_gamma2) uses.push_back("gamma2");
  report["first_integrals"] = {{"phi1", pair.phi1.to_string()},
                               {"phi2", pair.phi2.to_string()},
                               {"lambda1", number_json(pair.derivation.lambda1)},
                               {"lambda2", number_json(pair.derivation.lambda2)},
                               {"auxiliaries", uses},
                               {"independent", verify_independence(pair)}};
  const Splitting s = build_splitting(f, *v.cond_iii.witness);
  report["splitting"] = {{"k", std::to_string(s.k)}, {"e", to_string(s.e)}, {"w1", s.w1.to_string()}, {"w2", s.w2.to_string()}};
}

Json oracle_json(const TrajectoryConfig& cfg, const OracleRun& run) {
  Json j;
  j["step"] = cfg.step;
  j["horizon"] = cfg.horizon;
  j["margin"] = cfg.margin;
  j["start"] = {to_string(cfg.x0), to_string(cfg.y0)};
  j["samples"] = run.trajectory.samples.size();
  j["aborted"] = run.trajectory.aborted;
  if (run.trajectory.aborted) j["abort_reason"] = run.trajectory.abort_reason;
  if (!run.trajectory.samples.empty()) {
    const auto& last = run.trajectory.samples.back();
    j["final"] = {{"s", to_double(last.s)}, {"x", to_double(last.x)}, {"y", to_double(last.y)}};
  }
  if (!run.phis.empty()) {
    j["drift"] = run.drift.drift;
    j["max_drift"] = run.drift.max_drift;
    j["excluded_samples"] = run.drift.excluded_samples;
  }
  return j;
}

std::vector<CheckResult> verify_report(const Json& report) {
  std::vector<CheckResult> out;
  auto check = [&](std::string name, bool passed, std::string detail = {}) {
    out.push_back({std::move(name), passed, std::move(detail)});
  };

  const Json& fj = require(report, "f");
  const std::string num_text = require_string(fj, "num");
  const std::string den_text = require_string(fj, "den");
  const ExtendedExpression f = malformed_on_error("f", [&] {
    return ExtendedExpression::from_fraction(parse_polynomial(num_text, "x"), parse_polynomial(den_text, "x"));
  });

  FieldPtr field;
  const bool internal = require_bool(report, "internal");
  const bool ci = require_bool(require(report, "condition_i"), "holds");
  check("condition-i", ci == !f.is_zero(), ci ? "f is nonzero" : "f is zero");

  const Json& ii = require(report, "condition_ii");
  const bool cii = require_bool(ii, "holds");
  if (cii) {
    const std::string branch = require_string(ii, "branch");
    if (branch == "derivative") {
      const ExtendedExpression g = expression_field(ii, "g", field);
      check("condition-ii", verify_derivative_identity(f, g), "1/f = d/dx(g)");
    } else if (branch == "log-derivative") {
      const NumberFieldElement c = number_from_json(require(ii, "c"), field);
      const ExtendedExpression g = expression_field(ii, "g", field);
      check("condition-ii", verify_log_derivative_identity(f, c, g), "1/f = c*g'/g");
      if (ii.contains("g_factors"))
        check("condition-ii-factors", factor_product(ii.at("g_factors"), field) == g, "g equals its factor product");
    } else {
      throw MalformedInput("unknown condition (ii) branch '" + branch + "'");
    }
  }

  const Json& iii = require(report, "condition_iii");
  const bool ciii = require_bool(iii, "holds");
  Integer k;
  Rational e;
  if (ciii) {
    k = integer_field(iii, "k");
    e = rational_field(iii, "e");
    const Rational alpha = rational_field(iii, "alpha");
    const ExtendedExpression h = expression_field(iii, "h", field);
    check("condition-iii", verify_log_factor_identity(f, k, e, h), "(k*x - e)/f = h'/h");
    check("alpha-consistency", e == Rational(k) * alpha, "e = k*alpha");
    if (iii.contains("h_factors"))
      check("condition-iii-factors", factor_product(iii.at("h_factors"), field) == h, "h equals its factor product");
  }

  check("internal-claim", internal == (ci && cii && ciii), "internal iff (i), (ii) and (iii) hold");

  if (report.contains("first_integrals")) {
    const Json& fi = require(report, "first_integrals");
    ExtendedDerivation der;
    der.lambda1 = number_from_json(require(fi, "lambda1"), field);
    der.lambda2 = number_from_json(require(fi, "lambda2"), field);
    der.f_num = parse_polynomial(num_text, "x");
    der.f_den = parse_polynomial(den_text, "x");
    const ExtendedExpression phi1 = expression_field(fi, "phi1", field);
    const ExtendedExpression phi2 = expression_field(fi, "phi2", field);
    check("first-integral-phi1", verify_first_integral(phi1, der), "Lie derivative of phi1 vanishes");
    check("first-integral-phi2", verify_first_integral(phi2, der), "Lie derivative of phi2 vanishes");
    check("independence", verify_independence(phi1, phi2), "d(phi1, phi2)/d(x, y) is nonzero");
    check("structure", !phi1.mentions(Generator::Y) && !phi2.mentions(Generator::T), "phi1 is y-free and phi2 is t-free");
  } else if (internal) {
    check("first-integrals-present", false, "internal report without first integrals");
  }

  if (report.contains("splitting")) {
    const Json& sp = require(report, "splitting");
    const Integer sk = integer_field(sp, "k");
    const Rational se = rational_field(sp, "e");
    const ExtendedExpression w1 = expression_field(sp, "w1", field);
    const ExtendedExpression w2 = expression_field(sp, "w2", field);
    if (!sk.fits_slong_p()) throw MalformedInput("splitting exponent out of range");
    check("splitting", verify_splitting(f, sk.get_si(), se, w1, w2), "y^k = w1*w2 and w2'/w2 = e");
  } else if (internal) {
    check("splitting-present", false, "internal report without a splitting");
  }
  return out;
}

}  // namespace lpb
