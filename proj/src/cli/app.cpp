#include "lpb/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "lpb/cli/parser.hpp"
#include "lpb/cli/report.hpp"

namespace lpb {

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string expression;
  std::string path;
  double step = 1e-4;
  double horizon = 0.5;
  double margin = 0.05;
  double tolerance = 1e-8;
  std::string start = "1,1";
  std::string csv;
  unsigned jobs = 0;
  int count = 25;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string number_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  FieldPtr field;
  const NumberFieldElement u = number_from_json(j, field);
  return format_nf(u) + " where " + format_poly(field->minpoly(), "z") + " = 0";
}

void print_verdict(std::ostream& out, const Json& r) {
  out << "f = " << r["f"]["text"].get<std::string>() << "\n";
  out << "internal: " << (r["internal"].get<bool>() ? "yes" : "no") << "\n";
  out << "  (i)   " << (r["condition_i"]["holds"].get<bool>() ? "holds" : "fails: f is zero") << "\n";
  const Json& ii = r["condition_ii"];
  if (ii["holds"].get<bool>()) {
    out << "  (ii)  holds, " << ii["branch"].get<std::string>() << " branch: g = " << ii["g"].get<std::string>();
    if (ii.contains("c")) out << ", c = " << number_text(ii["c"]);
    out << "\n";
  } else {
    out << "  (ii)  fails: derivative branch " << ii["reasons"]["derivative_branch"].get<std::string>()
        << ", log branch " << ii["reasons"]["log_branch"].get<std::string>() << "\n";
  }
  const Json& iii = r["condition_iii"];
  if (iii["holds"].get<bool>()) {
    out << "  (iii) holds: k = " << iii["k"].get<std::string>() << ", e = " << iii["e"].get<std::string>()
        << ", h = " << iii["h"].get<std::string>() << "\n";
  } else {
    out << "  (iii) fails: " << iii["reason"].get<std::string>() << "\n";
  }
}

void print_certificates(std::ostream& out, const Json& r) {
  if (!r.contains("first_integrals")) return;
  const Json& fi = r["first_integrals"];
  out << "first integrals:\n";
  out << "  phi1 = " << fi["phi1"].get<std::string>() << "\n";
  out << "  phi2 = " << fi["phi2"].get<std::string>() << "\n";
  out << "  gamma1' = lambda1*gamma1, lambda1 = " << number_text(fi["lambda1"]) << "\n";
  out << "  gamma2' = lambda2*gamma2, lambda2 = " << number_text(fi["lambda2"]) << "\n";
  out << "  independent: " << (fi["independent"].get<bool>() ? "yes" : "no") << "\n";
  const Json& sp = r["splitting"];
  out << "splitting: y^" << sp["k"].get<std::string>() << " = w1 * w2\n";
  out << "  w1 = " << sp["w1"].get<std::string>() << "\n";
  out << "  w2 = " << sp["w2"].get<std::string>() << "\n";
}

Json analyse(const std::string& input, const RationalFunction& f, bool certificates) {
  const Verdict v = decide(f);
  Json r = verdict_json(input, f, v);
  if (certificates && v.internal) add_certificates(r, f, v);
  return r;
}

int cmd_decide(const Options& o, bool certificates, std::ostream& out) {
  const RationalFunction f = parse_rational_function(o.expression);
  const Json r = analyse(o.expression, f, certificates);
  if (o.json) {
    print_json(out, r);
  } else {
    print_verdict(out, r);
    if (certificates) print_certificates(out, r);
  }
  return r["internal"].get<bool>() ? kExitOk : kExitNegative;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Json report = read_json_file(o.path);
  const std::vector<CheckResult> checks = verify_report(report);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  if (o.json) {
    Json j;
    j["passed"] = ok;
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    print_json(out, j);
  } else {
    for (const auto& c : checks) out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    out << (ok ? "all certificates verified" : "verification failed") << "\n";
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const RationalFunction f = parse_rational_function(o.expression);
  const Verdict v = decide(f);
  TrajectoryConfig cfg;
  cfg.step = o.step;
  cfg.horizon = o.horizon;
  cfg.margin = o.margin;
  const auto comma = o.start.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--start", "expected x0,y0");
  try {
    cfg.x0 = parse_rational(trim(o.start.substr(0, comma)));
    cfg.y0 = parse_rational(trim(o.start.substr(comma + 1)));
  } catch (const InvalidInput& e) {
    throw CLI::ValidationError("--start", e.what());
  }

  OracleRun run;
  ExtendedDerivation der{f.num(), f.den(), Rational(0), Rational(0)};
  if (v.internal) {
    const FirstIntegralPair pair = build_first_integrals(f, v);
    der = pair.derivation;
    run.phis = {pair.phi1, pair.phi2};
    cfg.avoid = certificate_denominators(pair);
  }
  try {
    run.trajectory = rk4_flow(der, cfg);
  } catch (const InvalidInput& e) {
    throw CLI::ValidationError("oracle", e.what());
  }
  if (!run.phis.empty()) run.drift = conservation_check(run.phis, run.trajectory);

  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw std::ios_base::failure("cannot write " + o.csv);
    write_csv(csv, run.trajectory, run.phis);
  }

  const bool ok = v.internal && !run.trajectory.aborted && run.drift.max_drift <= o.tolerance;
  if (o.json) {
    Json j;
    j["input"] = o.expression;
    j["internal"] = v.internal;
    j["oracle"] = oracle_json(cfg, run);
    j["oracle"]["tolerance"] = o.tolerance;
    j["oracle"]["passed"] = ok;
    print_json(out, j);
  } else {
    out << "f = " << format_rf(f) << "\n";
    out << "samples: " << run.trajectory.samples.size();
    if (run.trajectory.aborted) out << " (stopped: " << run.trajectory.abort_reason << ")";
    out << "\n";
    if (v.internal) {
      out << std::setprecision(3) << "drift: phi1 " << run.drift.drift[0] << ", phi2 " << run.drift.drift[1]
          << " (tolerance " << o.tolerance << ")\n";
    } else {
      out << "no certified first integrals: f is not internal\n";
    }
  }
  return ok ? kExitOk : kExitNegative;
}

struct BatchResult {
  std::string status;  // "ok", "mismatch", "error", or "-" without an expectation
  bool internal = false;
  std::string message;
};

BatchResult run_line(const CorpusLine& line) {
  BatchResult r;
  try {
    r.internal = decide(parse_rational_function(line.expression)).internal;
  } catch (const std::exception& e) {
    r.status = "error";
    r.message = e.what();
    return r;
  }
  if (line.expect == CorpusLine::Expect::None) {
    r.status = "-";
  } else {
    r.status = r.internal == (line.expect == CorpusLine::Expect::Internal) ? "ok" : "mismatch";
  }
  return r;
}

std::string_view expect_name(CorpusLine::Expect e) {
  switch (e) {
    case CorpusLine::Expect::Internal:
      return "internal";
    case CorpusLine::Expect::NotInternal:
      return "not-internal";
    case CorpusLine::Expect::None:
      break;
  }
  return "-";
}

int cmd_batch(const Options& o, std::ostream& out) {
  std::ifstream in(o.path);
  if (!in) throw std::ios_base::failure("cannot read " + o.path);
  const std::vector<CorpusLine> lines = parse_corpus(in);

  std::vector<BatchResult> results(lines.size());
  unsigned workers = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, lines.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < lines.size();) results[i] = run_line(lines[i]);
    });
  }
  pool.clear();

  int mismatches = 0, errors = 0, internal = 0;
  for (const auto& r : results) {
    mismatches += r.status == "mismatch";
    errors += r.status == "error";
    internal += r.status != "error" && r.internal;
  }

  if (o.json) {
    Json j;
    j["results"] = Json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Json row = {{"line", lines[i].line_number},
                  {"expression", lines[i].expression},
                  {"expected", expect_name(lines[i].expect)},
                  {"status", results[i].status}};
      if (results[i].status == "error") {
        row["error"] = results[i].message;
      } else {
        row["internal"] = results[i].internal;
      }
      j["results"].push_back(row);
    }
    j["summary"] = {{"total", lines.size()},
                    {"internal", internal},
                    {"not_internal", static_cast<int>(lines.size()) - internal - errors},
                    {"mismatches", mismatches},
                    {"errors", errors}};
    print_json(out, j);
  } else {
    out << std::left << std::setw(6) << "line" << std::setw(14) << "verdict" << std::setw(14) << "expected"
        << std::setw(10) << "status" << "expression\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const BatchResult& r = results[i];
      const std::string verdict = r.status == "error" ? "error" : (r.internal ? "internal" : "not-internal");
      out << std::setw(6) << lines[i].line_number << std::setw(14) << verdict << std::setw(14)
          << expect_name(lines[i].expect) << std::setw(10) << r.status << lines[i].expression;
      if (r.status == "error") out << "  (" << r.message << ")";
      out << "\n";
    }
    out << lines.size() << " expressions, " << internal << " internal, " << mismatches << " mismatches, " << errors
        << " errors\n";
  }
  if (errors) return kExitExpression;
  return mismatches ? kExitNegative : kExitOk;
}

// Randomized self-check: the two round trips and the certify -> JSON -> verify pipeline.
class SelfTest {
 public:
  explicit SelfTest(std::uint64_t seed) : rng_(seed) {}

  bool derivative_round_trip() {
    RationalFunction g;
    do {
      g = RationalFunction(poly(4), nonzero_poly(4));
    } while (g.derivative().is_zero());
    const RationalFunction f = RationalFunction(Poly(Rational(1))) / g.derivative();
    return holds(check_condition_ii(f)) && std::holds_alternative<DerivativeWitness>(check_condition_ii(f));
  }

  bool log_factor_round_trip() {
    const Rational alpha = rational();
    RationalFunction h(Poly(Rational(1)));
    const int factors = uniform(1, 3);
    for (int i = 0; i < factors; ++i) {
      long n = uniform(-3, 3);
      if (n == 0) n = 1;
      h = h * rf_power(RationalFunction(irreducible(uniform(1, 3))), n);
    }
    if (h.derivative().is_zero()) return true;
    const RationalFunction f = RationalFunction(Poly({-alpha, Rational(1)})) * h / h.derivative();
    const ConditionIIIResult r = check_condition_iii(f);
    if (!r.witness) return false;
    return verify_log_factor_identity(ExtendedExpression::from_fraction(f.num(), f.den()), r.witness->k, r.witness->e,
                                      to_expression(r.witness->h));
  }

  bool certify_verify() {
    const RationalFunction f = internal_instance();
    const Verdict v = decide(f);
    if (!v.internal) return false;
    Json report = verdict_json(format_rf(f), f, v);
    add_certificates(report, f, v);
    const Json reread = Json::parse(report.dump());
    const auto checks = verify_report(reread);
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational() { return make_rational(uniform(-6, 6), uniform(1, 3)); }

  Poly poly(int max_degree) {
    std::vector<Rational> c(uniform(0, max_degree) + 1);
    for (auto& v : c) v = rational();
    return Poly(c);
  }

  Poly nonzero_poly(int max_degree) {
    Poly p;
    while (p.is_zero()) p = poly(max_degree);
    return p;
  }

  Poly irreducible(int degree) {
    for (;;) {
      std::vector<Rational> c(degree + 1);
      for (auto& v : c) v = uniform(-5, 5);
      c.back() = 1;
      const auto fs = factor_over_Q(Poly(c));
      if (fs.size() == 1 && fs[0].multiplicity == 1) return fs[0].poly;
    }
  }

  // lambda*(x - a)^2 or lambda times distinct rational linear factors
  RationalFunction internal_instance() {
    const Rational lambda = [this] {
      Rational l;
      while (l == 0) l = rational();
      return l;
    }();
    if (uniform(0, 1) == 0) {
      const Rational a = rational();
      return RationalFunction(Poly({lambda * a * a, -2 * lambda * a, lambda}));
    }
    std::vector<Rational> roots;
    const int n = uniform(2, 4);
    while (static_cast<int>(roots.size()) < n) {
      const Rational r = rational();
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Poly p(lambda);
    for (const Rational& r : roots) p = p * Poly({-r, Rational(1)});
    return RationalFunction(p);
  }

  std::mt19937_64 rng_;
};

int cmd_selftest(const Options& o, std::ostream& out) {
  SelfTest st(o.seed);
  struct Tally {
    const char* name;
    bool (SelfTest::*fn)();
    int passed = 0;
  };
  Tally tallies[] = {{"derivative-round-trip", &SelfTest::derivative_round_trip},
                     {"log-factor-round-trip", &SelfTest::log_factor_round_trip},
                     {"certify-verify", &SelfTest::certify_verify}};
  for (int i = 0; i < o.count; ++i)
    for (auto& t : tallies) t.passed += (st.*t.fn)();
  bool ok = true;
  Json j;
  j["seed"] = o.seed;
  j["count"] = o.count;
  for (const auto& t : tallies) {
    ok = ok && t.passed == o.count;
    j["results"][t.name] = t.passed;
    if (!o.json) out << t.name << ": " << t.passed << "/" << o.count << "\n";
  }
  j["passed"] = ok;
  if (o.json) print_json(out, j);
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

std::vector<CorpusLine> parse_corpus(std::istream& in) {
  std::vector<CorpusLine> lines;
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    const auto hash = raw.find('#');
    CorpusLine line{number, trim(std::string_view(raw).substr(0, hash))};
    if (hash != std::string::npos) {
      const std::string comment = trim(std::string_view(raw).substr(hash + 1));
      if (comment.starts_with("expect:")) {
        const std::string value = trim(std::string_view(comment).substr(7));
        if (value == "internal") {
          line.expect = CorpusLine::Expect::Internal;
        } else if (value == "not-internal") {
          line.expect = CorpusLine::Expect::NotInternal;
        } else {
          throw MalformedInput("line " + std::to_string(number) + ": unknown expectation '" + value + "'");
        }
        if (line.expression.empty())
          throw MalformedInput("line " + std::to_string(number) + ": expectation without an expression");
      }
    }
    if (!line.expression.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Decides whether the pullback of y' = y under x' = f(x) is almost internal to the constants, "
               "and emits exact certificates.",
               "lpb");
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--seed", o.seed, "Seed for randomized commands");

  auto expression_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("expr", o.expression, "Rational function of x, e.g. \"x*(x-1)\"")->required();
    return sub;
  };
  CLI::App* decide_cmd = expression_command("decide", "Decide conditions (i)-(iii)");
  CLI::App* certify_cmd = expression_command("certify", "Decide and emit certificates, first integrals and splitting");
  CLI::App* oracle_cmd = expression_command("oracle", "Integrate the flow and measure first-integral drift");
  oracle_cmd->add_option("--step", o.step, "RK4 step")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--horizon", o.horizon, "Integration horizon")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--margin", o.margin, "Pole-avoidance margin")->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--start", o.start, "Initial point x0,y0 (exact rationals)");
  oracle_cmd->add_option("--tolerance", o.tolerance, "Maximum relative drift")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--csv", o.csv, "Write the trajectory as CSV");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Re-check every certificate in a JSON report");
  verify_cmd->fallthrough();
  verify_cmd->add_option("report", o.path, "Report written by certify --json")->required();

  CLI::App* batch_cmd = app.add_subcommand("batch", "Decide every expression of a corpus file");
  batch_cmd->fallthrough();
  batch_cmd->add_option("corpus", o.path, "One expression per line, optional '# expect: internal|not-internal'")
      ->required();
  batch_cmd->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Randomized round-trip checks");
  selftest_cmd->fallthrough();
  selftest_cmd->add_option("--count", o.count, "Cases per check")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'lpb --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*decide_cmd) return cmd_decide(o, false, out);
    if (*certify_cmd) return cmd_decide(o, true, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*batch_cmd) return cmd_batch(o, out);
    if (*selftest_cmd) return cmd_selftest(o, out);
  } catch (const ExpressionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitExpression;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace lpb
