// tamelab: command-line front end. Reports are markdown by default, JSON with
// --json; identical arguments give byte-identical output unless --timing is set.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tamelab/json_io.hpp"

using namespace tamelab;
using io::Json;

namespace {

/// Bad arguments that CLI11 cannot see (e.g. a composite p).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Indeterminate };

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

struct Entry {
  std::string anchor;
  Status status;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::optional<std::uint64_t> seed;
  std::vector<Entry> ledger;
  std::vector<std::string> notes;
  Json data = Json::object();

  void add(std::string anchor, Status s, std::string detail = {}) {
    ledger.push_back({std::move(anchor), s, std::move(detail)});
  }
  void add(std::string anchor, bool ok, std::string detail = {}) {
    add(std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(detail));
  }
  void absorb(const SuiteReport& r) {
    for (const SuiteItem& it : r.items) add(it.anchor, it.passed, it.detail);
    for (const std::string& n : r.notes) notes.push_back(r.name + ": " + n);
  }
  bool failed() const {
    for (const Entry& e : ledger)
      if (e.status == Status::Fail) return true;
    return false;
  }
};

struct Options {
  bool json = false;
  bool timing = false;
};

std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

void emit(const RunReport& r, const Options& opt, std::optional<double> ms) {
  if (opt.json) {
    Json j{{"command", r.command}};
    if (r.seed) j["seed"] = *r.seed;
    Json ledger = Json::array();
    for (const Entry& e : r.ledger) {
      ledger.push_back(Json{{"anchor", e.anchor}, {"status", to_string(e.status)}, {"detail", e.detail}});
    }
    j["ledger"] = ledger;
    j["data"] = r.data;
    j["notes"] = r.notes;
    if (ms) j["timing_ms"] = *ms;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "# " << r.command << "\n\n";
  if (r.seed) std::cout << "seed: " << *r.seed << "\n\n";
  std::cout << "| anchor | status | detail |\n|---|---|---|\n";
  for (const Entry& e : r.ledger) {
    std::cout << "| " << cell(e.anchor) << " | " << to_string(e.status) << " | " << cell(e.detail) << " |\n";
  }
  if (!r.notes.empty()) {
    std::cout << "\n";
    for (const std::string& n : r.notes) std::cout << "- " << n << "\n";
  }
  if (ms) std::cout << "\ntime: " << *ms << " ms\n";
}

void require_odd_prime(long p) {
  if (p < 3 || !is_odd_prime(static_cast<u64>(p))) throw UsageError("p must be an odd prime, got " + std::to_string(p));
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool is_square_mod(i64 a, u64 p) {
  const i64 r = ((a % static_cast<i64>(p)) + static_cast<i64>(p)) % static_cast<i64>(p);
  for (u64 x = 0; x < p; ++x)
    if (x * x % p == static_cast<u64>(r)) return true;
  return false;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  long p = 5;
  int prec = 4;
  std::string suite = "all";
  std::optional<long> a;
  std::optional<long> qnorm;
};

void cmd_verify_examples(const VerifyArgs& args, RunReport& r) {
  require_odd_prime(args.p);
  if (args.prec < 3) throw UsageError("precision must be >= 3");
  const u64 p = static_cast<u64>(args.p);
  const bool all = args.suite == "all";
  if (all || args.suite == "sl2") {
    const long q = args.qnorm.value_or(args.p + 1);
    r.absorb(sl2_tame_suite(p, args.prec, q));
  }
  if (all || args.suite == "series") {
    // Plain Z/p^N entries, then one series variable with M = 3, for k = 1, 2.
    for (auto [n_vars, trunc] : {std::pair{0, args.prec}, std::pair{1, 3}}) {
      for (int k : {1, 2}) {
        SeriesSuiteOptions o;
        o.p = p;
        o.k = k;
        o.n_vars = n_vars;
        o.trunc = trunc;
        const SeriesSuiteReport s = slm_series_suite(o);
        for (const SuiteItem& it : s.report.items) {
          r.add("n_vars=" + std::to_string(n_vars) + ",M=" + std::to_string(trunc) + ",k=" + std::to_string(k) + " " + it.anchor,
                it.passed, it.detail);
        }
      }
    }
  }
  if (all || args.suite == "quaternion") {
    long a = 0;
    if (args.a) {
      a = *args.a;
    } else {
      for (a = 2; is_square_mod(a, p); ++a) {
      }
    }
    const QuaternionSuiteReport q = quaternion_uniform_suite(a, p, args.prec);
    r.absorb(q.report);
    r.data["quaternion"] = Json{{"a", a}, {"searched_pairs", q.searched_pairs}, {"hits", q.hits}};
  }
  if (!all && args.suite != "sl2" && args.suite != "series" && args.suite != "quaternion") {
    throw UsageError("unknown suite " + args.suite);
  }
}

// ---------------------------------------------------------------------------

struct PCentralArgs {
  int m = 2;
  int k = 1;
  long p = 3;
  int prec = 4;
  int window = 2;
};

void cmd_pcentral(const PCentralArgs& args, RunReport& r) {
  require_odd_prime(args.p);
  if (args.m < 2 || args.k < 1 || args.prec < 2 || args.k >= args.prec) throw UsageError("need m >= 2, 1 <= k < prec");
  if (args.window < 1 || args.window > args.prec - 1) {
    throw AlgebraError(ErrorKind::WindowTooLarge, "window " + std::to_string(args.window) + " needs 1 <= window <= prec - 1");
  }
  const u64 p = static_cast<u64>(args.p);
  std::vector<ScalarMatrix> gens = sl_congruence_generators(static_cast<std::size_t>(args.m), p, args.prec);
  // SL_m^1 is uniform, so the p^(k-1)-th powers of its generators generate SL_m^k.
  i64 e = 1;
  for (int i = 1; i < args.k; ++i) e *= static_cast<i64>(p);
  for (ScalarMatrix& g : gens) g = int_power(g, e);
  const FiniteQuotientGroup g = FiniteQuotientGroup::closure(gens);
  const PCentralChain chain = pcentral_series(g);
  r.add("pcentral/order", Status::Pass, std::to_string(p) + "^" + std::to_string(g.order_exponent()));
  std::vector<int> dims;
  for (int n = 1; n <= args.window; ++n) {
    const int d = n <= static_cast<int>(chain.dims.size()) ? chain.dims[n - 1] : 0;
    dims.push_back(d);
    r.add("pcentral/d_" + std::to_string(n), Status::Pass, std::to_string(d));
  }
  Json data{{"order", std::to_string(p) + "^" + std::to_string(g.order_exponent())}, {"dims", dims}, {"window", args.window}};
  if (args.window < args.prec - 1) {
    const UniformityReport u = uniformity_check(g, args.window);
    r.add("pcentral/uniform", u.uniform, "d = " + join(u.dims));
    data = io::pcentral_report(g, u);
  } else {
    r.add("pcentral/uniform", Status::Indeterminate, "no precision headroom above the window");
    data["uniform"] = nullptr;
  }
  r.data = data;
}

// ---------------------------------------------------------------------------

struct LieArgs {
  std::string input;
  std::vector<std::string> tests{"classify"};
  std::uint64_t seed = 1;
  int trials = 200;
};

Json certificates_json(const std::vector<InertialLieCertificate>& certs) {
  Json out = Json::array();
  for (const InertialLieCertificate& c : certs) {
    out.push_back(Json{{"y", format_vector(c.y)}, {"x", format_vector(c.x)}, {"lambda", io::rational_string(c.lambda)}});
  }
  return out;
}

void cmd_lie(const LieArgs& args, RunReport& r) {
  const LieAlgebra l = io::lie_from_json(io::read_file(args.input));
  r.seed = args.seed;
  const ValidationReport v = validate(l);
  r.add("lie/validate", v.violation == ValidationReport::Violation::None,
        v.violation == ValidationReport::Violation::None ? "antisymmetric, Jacobi" : "violation at (" + std::to_string(v.i) + "," +
                                                                                          std::to_string(v.j) + "," + std::to_string(v.k) + ")");
  if (r.failed()) return;
  r.data["dim"] = l.dim();
  r.data["field"] = l.field().to_string();
  if (l.field().kind == FieldDescriptor::Kind::PAdic) {
    r.notes.push_back("computations are exact over Q; Q_p-specific verdicts are reported as caveats");
  }
  for (const std::string& t : args.tests) {
    if (t == "validate") {
      continue;
    } else if (t == "perfect") {
      const bool perfect = is_perfect(l);
      r.add("lie/perfect", Status::Pass, perfect ? "yes" : "no");
      r.data["perfect"] = perfect;
    } else if (t == "radical") {
      const std::size_t d = radical(l).size();
      r.add("lie/radical", Status::Pass, "dim " + std::to_string(d));
      r.data["radical_dim"] = d;
    } else if (t == "killing") {
      const QMatrix k = killing_form(l);
      Json rows = Json::array();
      std::string detail;
      for (std::size_t i = 0; i < k.rows(); ++i) {
        QVector row;
        for (std::size_t j = 0; j < k.cols(); ++j) row.push_back(k(i, j));
        rows.push_back(format_vector(row));
        detail += (i ? " " : "") + format_vector(row);
      }
      r.add("lie/killing", Status::Pass, detail);
      r.data["killing"] = rows;
    } else if (t == "toral") {
      const ToralSample s = is_toral_sampled(l, args.trials, args.seed);
      const ToralCertificate c = certify_toral(l);
      std::string detail = s.not_toral ? "not toral, witness " + format_vector(*s.witness)
                                       : (s.exact ? "toral (abelian)" : "toral-likely after " + std::to_string(s.checked) + " samples");
      r.add("lie/toral-sampled", s.not_toral || s.exact ? Status::Pass : Status::Indeterminate, detail);
      r.add("lie/toral-exact", c.verdict == ToralCertificate::Verdict::Unknown ? Status::Indeterminate : Status::Pass,
            std::string(to_string(c.verdict)) + (c.method.empty() ? "" : " (" + c.method + ")"));
      r.data["toral"] = Json{{"sampled", detail}, {"checked", s.checked}, {"exact", std::string(to_string(c.verdict))}};
    } else if (t == "inertial") {
      const InertialSpan s = inertial_span(l, args.trials, args.seed);
      r.add("lie/inertial-span", s.certified ? Status::Pass : Status::Indeterminate,
            "rank " + std::to_string(s.rank) + " of " + std::to_string(l.dim()));
      r.data["inertial"] = Json{{"certified", s.certified}, {"rank", s.rank}, {"certificates", certificates_json(s.certificates)}};
    } else if (t == "classify") {
      const Classification c = classify(l, args.trials, args.seed);
      r.add("lie/perfect", Status::Pass, c.perfect ? "yes" : "no");
      r.add("lie/radical", Status::Pass, "dim " + std::to_string(c.radical_dim));
      const std::string toral = c.toral.not_toral ? "not toral, witness " + format_vector(*c.toral.witness)
                                                  : (c.toral.exact ? "toral (abelian)" : "toral-likely after " + std::to_string(c.toral.checked) + " samples");
      r.add("lie/toral", c.toral.not_toral || c.toral.exact ? Status::Pass : Status::Indeterminate, toral);
      r.add("lie/inertial-span", c.inertial.certified ? Status::Pass : Status::Indeterminate,
            "rank " + std::to_string(c.inertial.rank) + " of " + std::to_string(l.dim()));
      r.add("lie/pluperfect", c.pluperfect == Classification::Pluperfect::Inconclusive ? Status::Indeterminate : Status::Pass,
            std::string(to_string(c.pluperfect)) + (c.pluperfect_reason.empty() ? "" : ": " + c.pluperfect_reason));
      if (!c.caveat.empty()) r.notes.push_back(c.caveat);
      r.data["classification"] = Json{{"perfect", c.perfect},
                                      {"radical_dim", c.radical_dim},
                                      {"toral", toral},
                                      {"toral_exact", std::string(to_string(c.toral_certificate.verdict))},
                                      {"inertial", {{"certified", c.inertial.certified}, {"rank", c.inertial.rank},
                                                    {"certificates", certificates_json(c.inertial.certificates)}}},
                                      {"pluperfect", std::string(to_string(c.pluperfect))}};
    } else {
      throw UsageError("unknown lie test " + t);
    }
  }
}

// ---------------------------------------------------------------------------

void cmd_certify(const std::string& input, RunReport& r) {
  const GroupInertialCertificate c = io::certificate_from_json(io::read_file(input));
  const bool ok = verify_certificate(c);
  r.add("certify/[x,y]=y^(a p^k)", ok, "k = " + std::to_string(c.k) + ", a = " + c.a.to_string());
  if (const auto e = p_power_order_exponent(c.y)) r.data["y_order"] = "p^" + std::to_string(*e);
  r.data["certificate"] = io::to_json(c);
}

struct PlanArgs {
  long p = 5;
  int prec = 4;
  long a = 1;
  long b = 1;
  int k = 1;
  std::string cert;
};

void cmd_plan(const PlanArgs& args, RunReport& r) {
  GroupInertialCertificate c{ScalarMatrix(1, PadicScalar(3, 1, 0)), ScalarMatrix(1, PadicScalar(3, 1, 0)), PadicScalar(3, 1, 0), 1};
  if (!args.cert.empty()) {
    c = io::certificate_from_json(io::read_file(args.cert));
  } else {
    require_odd_prime(args.p);
    if (args.prec < 2 || args.k < 1 || args.k >= args.prec) throw UsageError("need prec >= 2 and 1 <= k < prec");
    // x = diag(u, u^-1), y = [[1, p], [0, 1]] with u^2 = 1 + a p^k: [x, y] = y^(u^2 - 1).
    const u64 p = static_cast<u64>(args.p);
    const PadicScalar zero(p, args.prec, 0);
    const PadicScalar a = zero.from_int_like(args.a);
    const PadicScalar u = hensel_sqrt(zero.one_like() + a * pow(zero.from_int_like(static_cast<i64>(p)), args.k));
    ScalarMatrix x = ScalarMatrix::identity(2, zero);
    x(0, 0) = u;
    x(1, 1) = u.inverse();
    c = {ScalarMatrix::from_ints(zero, {{1, static_cast<i64>(p)}, {0, 1}}), x, a, args.k};
  }
  const PadicScalar b = c.a.from_int_like(args.b);
  r.data["certificate"] = io::to_json(c);
  try {
    const LocalPlan plan = build_local_plan(c, b);
    r.add("plan/certificate", true);
    r.add("plan/[x^alpha,y]=y^(q-1)", true, "alpha = " + plan.alpha.to_string() + ", q - 1 = " + plan.q_minus_1.to_string());
    r.add("plan/int_power oracle", verify_plan(plan));
    r.data["plan"] = io::to_json(plan);
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::CertificateInvalid) {
      r.add("plan/certificate", false, e.what());
    } else if (e.kind() == ErrorKind::TameRelationFailed) {
      r.add("plan/certificate", true);
      r.add("plan/[x^alpha,y]=y^(q-1)", false, e.what());
    } else {
      throw;
    }
  }
}

// ---------------------------------------------------------------------------

struct BoundArgs {
  std::string input;
  std::string disc = "1";
  long r1 = 1;
  long r2 = 0;
  std::vector<long> norms;
  bool grh = false;
};

void cmd_bound(const BoundArgs& args, RunReport& r) {
  SplittingBoundInput in;
  if (!args.input.empty()) {
    in = io::bound_input_from_json(io::read_file(args.input));
  } else {
    in = {args.disc, args.r1, args.r2, args.norms, args.grh};
  }
  const SplittingBoundResult res = splitting_bound(in);
  const Status s = res.verdict == Verdict::True ? Status::Pass : res.verdict == Verdict::False ? Status::Fail : Status::Indeterminate;
  r.add("bound/alpha_T+alpha_inf>log sqrt|d_K|", s,
        std::string("verdict ") + std::string(to_string(res.verdict)) + ", alpha = " + (res.alpha_finite + res.alpha_infinite).to_string() +
            ", threshold = " + res.threshold.to_string());
  r.data["input"] = io::to_json(in);
  r.data["result"] = io::to_json(res);
}

struct GSArgs {
  long d = 2;
  std::vector<long> degrees;
  long grid = 100;
};

void cmd_gs(const GSArgs& args, RunReport& r) {
  const GSResult g = gs_negative(args.d, args.degrees, args.grid);
  if (g.negative) {
    r.add("gs/negative", Status::Pass,
          "f(" + io::rational_string(*g.witness_t) + ") = " + io::rational_string(*g.witness_value));
  } else {
    // A nonnegative grid proves nothing about the values between grid points.
    r.add("gs/negative", Status::Indeterminate, "grid minimum f(" + io::rational_string(g.min_t) + ") = " + io::rational_string(g.min_value));
  }
  r.data = io::to_json(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tamelab: exact checks for congruence matrix groups, Lie algebras, certificates and bounds"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of markdown");
  app.add_flag("--timing", opt.timing, "append wall-clock time (breaks byte-identical output)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-examples", "tame-relation, series and quaternion identity suites");
  verify->add_option("--p", va.p, "odd prime")->capture_default_str();
  verify->add_option("--prec", va.prec, "precision N >= 3")->capture_default_str();
  verify->add_option("--suite", va.suite, "sl2 | series | quaternion | all")->capture_default_str();
  verify->add_option("--a", va.a, "quaternion nonresidue (default: least nonresidue mod p)");
  verify->add_option("--qnorm", va.qnorm, "N(q) for the sl2 suite (default p + 1)");

  PCentralArgs pa;
  auto* pcentral = app.add_subcommand("pcentral", "closure, p-central series and uniformity of SL_m^k mod p^N");
  pcentral->add_option("--m", pa.m)->capture_default_str();
  pcentral->add_option("--k", pa.k)->capture_default_str();
  pcentral->add_option("--p", pa.p)->capture_default_str();
  pcentral->add_option("--prec", pa.prec)->capture_default_str();
  pcentral->add_option("--window", pa.window)->capture_default_str();

  LieArgs la;
  auto* lie = app.add_subcommand("lie", "Lie algebra checks on a structure-constant file");
  lie->add_option("--input", la.input, "Lie algebra JSON")->required();
  lie->add_option("--tests", la.tests, "validate, perfect, radical, killing, toral, inertial, classify")->delimiter(',')->capture_default_str();
  lie->add_option("--seed", la.seed, "seed for sampled verdicts")->capture_default_str();
  lie->add_option("--trials", la.trials, "random samples")->capture_default_str();

  std::string cert_path;
  auto* certify = app.add_subcommand("certify", "verify a group inertial certificate");
  certify->add_option("--input", cert_path, "certificate JSON")->required();

  PlanArgs pl;
  auto* plan = app.add_subcommand("plan", "build and check a local plan");
  plan->add_option("--p", pl.p)->capture_default_str();
  plan->add_option("--prec", pl.prec)->capture_default_str();
  plan->add_option("--a", pl.a)->capture_default_str();
  plan->add_option("--b", pl.b)->capture_default_str();
  plan->add_option("--k", pl.k)->capture_default_str();
  plan->add_option("--cert", pl.cert, "certificate JSON (replaces --p/--prec/--a/--k)");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "splitting bound verdict");
  bound->add_option("--input", ba.input, "bound input JSON");
  bound->add_option("--disc", ba.disc, "|d_K| as an integer or decimal")->capture_default_str();
  bound->add_option("--r1", ba.r1)->capture_default_str();
  bound->add_option("--r2", ba.r2)->capture_default_str();
  bound->add_option("--norms", ba.norms, "norms of the primes in T")->delimiter(',');
  bound->add_flag("--grh", ba.grh);

  GSArgs ga;
  auto* gs = app.add_subcommand("gs", "Golod-Shafarevich polynomial on a rational grid");
  gs->add_option("--d", ga.d)->capture_default_str();
  gs->add_option("--degrees", ga.degrees, "relation degrees")->delimiter(',');
  gs->add_option("--grid", ga.grid)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  RunReport report;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--timing") continue;
    report.command += (report.command.empty() ? "" : " ") + a;
  }
  report.command = "tamelab " + report.command;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*verify) cmd_verify_examples(va, report);
    if (*pcentral) cmd_pcentral(pa, report);
    if (*lie) cmd_lie(la, report);
    if (*certify) cmd_certify(cert_path, report);
    if (*plan) cmd_plan(pl, report);
    if (*bound) cmd_bound(ba, report);
    if (*gs) cmd_gs(ga, report);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SchemaError ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::optional<double> ms;
  if (opt.timing) {
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  emit(report, opt, ms);
  return report.failed() ? 1 : 0;
}
