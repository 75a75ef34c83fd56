#include "tamelab/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace tamelab::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw AlgebraError(ErrorKind::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

long small_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema(std::string(what) + " must be an integer");
  return j.get<long>();
}

mpz_class big_int(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) schema(std::string(what) + ": not an integer: " + s);
    return z;
  }
  schema(std::string(what) + " must be an integer or decimal string");
}

u64 residue(const mpz_class& z, u64 mod) { return mpz_fdiv_ui(z.get_mpz_t(), mod); }

Rational rational(const Json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) {
    Rational q;
    const std::string s = j.get<std::string>();
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) schema("not a rational: " + s);
    q.canonicalize();
    return q;
  }
  schema("structure constants must be integers or \"n/d\" strings");
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return rational_string(q);
}

Json interval_json(const Interval& x) { return Json{{"lo", x.lo_string()}, {"hi", x.hi_string()}}; }

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    schema(e.what());
  }
}

struct SeriesHeader {
  u64 p;
  int n_vars;
  int trunc;
};

SeriesHeader series_header(const Json& j) {
  const long p = small_int(field(j, "p"), "p");
  const long n = small_int(field(j, "n_vars"), "n_vars");
  const long m = small_int(field(j, "trunc"), "trunc");
  if (p < 2 || n < 0 || m < 1) schema("series header needs p >= 2, n_vars >= 0, trunc >= 1");
  return {static_cast<u64>(p), static_cast<int>(n), static_cast<int>(m)};
}

SeriesElement series_body(const SeriesHeader& h, const Json& coeffs) {
  if (!coeffs.is_array()) schema("\"coeffs\" must be an array");
  SeriesElement r(h.p, h.n_vars, h.trunc);
  const SeriesLayout& lay = r.layout();
  std::set<int> seen;
  for (const Json& term : coeffs) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array()) schema("series terms are [[exponents], value]");
    std::vector<int> exps;
    for (const Json& e : term[0]) {
      const long v = small_int(e, "exponent");
      if (v < 0) schema("exponents must be >= 0");
      exps.push_back(static_cast<int>(v));
    }
    if (exps.size() != static_cast<std::size_t>(h.n_vars)) schema("exponent vector length must equal n_vars");
    const int idx = lay.index_of(exps);
    if (idx < 0) schema("monomial lies in m^trunc");
    if (!seen.insert(idx).second) schema("repeated monomial");
    const u64 c = residue(big_int(term[1], "coefficient"), lay.coeff_mod[idx]);
    r = r + SeriesElement::monomial(h.p, h.n_vars, h.trunc, exps, static_cast<i64>(c));
  }
  return r;
}

Json series_coeffs(const SeriesElement& x) {
  Json out = Json::array();
  const SeriesLayout& lay = x.layout();
  for (std::size_t i = 0; i < lay.size(); ++i) {
    if (x.coefficients()[i] == 0) continue;
    out.push_back(Json::array({lay.monomials[i], std::to_string(x.coefficients()[i])}));
  }
  return out;
}

std::size_t matrix_size(const Json& j, std::size_t n_entries) {
  const long m = small_int(field(j, "m"), "m");
  if (m < 1) schema("m must be >= 1");
  if (n_entries != static_cast<std::size_t>(m * m)) schema("entries must hold m*m values");
  return static_cast<std::size_t>(m);
}

}  // namespace

std::string rational_string(const Rational& q) { return q.get_str(); }

Json to_json(const PadicScalar& x) {
  return Json{{"p", x.p()}, {"prec", x.precision()}, {"value", std::to_string(x.value())}};
}

PadicScalar scalar_from_json(const Json& j) {
  return guarded([&] {
    const long p = small_int(field(j, "p"), "p");
    const long prec = small_int(field(j, "prec"), "prec");
    if (p < 2 || prec < 1) schema("scalar needs p >= 2 and prec >= 1");
    const PadicScalar zero(static_cast<u64>(p), static_cast<int>(prec), 0);
    return PadicScalar::from_residue(zero.p(), zero.precision(), residue(big_int(field(j, "value"), "value"), zero.modulus()));
  });
}

Json to_json(const SeriesElement& x) {
  return Json{{"p", x.p()}, {"n_vars", x.n_vars()}, {"trunc", x.trunc()}, {"coeffs", series_coeffs(x)}};
}

SeriesElement series_from_json(const Json& j) {
  return guarded([&] { return series_body(series_header(j), field(j, "coeffs")); });
}

Json to_json(const ScalarMatrix& g) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < g.size(); ++k) entries.push_back(std::to_string(g(i, k).value()));
  return Json{{"ring", {{"p", g(0, 0).p()}, {"prec", g(0, 0).precision()}}}, {"m", g.size()}, {"entries", entries}};
}

ScalarMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    const Json& ring = field(j, "ring");
    Json header = ring;
    header["value"] = 0;
    const PadicScalar zero = scalar_from_json(header);
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) schema("\"entries\" must be an array");
    const std::size_t m = matrix_size(j, entries.size());
    ScalarMatrix g(m, zero);
    for (std::size_t i = 0; i < m * m; ++i) {
      g(i / m, i % m) = PadicScalar::from_residue(zero.p(), zero.precision(), residue(big_int(entries[i], "entry"), zero.modulus()));
    }
    return g;
  });
}

Json to_json(const SeriesMatrix& g) {
  const SeriesElement& e = g(0, 0);
  Json entries = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < g.size(); ++k) entries.push_back(series_coeffs(g(i, k)));
  return Json{{"ring", {{"p", e.p()}, {"n_vars", e.n_vars()}, {"trunc", e.trunc()}}}, {"m", g.size()}, {"entries", entries}};
}

SeriesMatrix series_matrix_from_json(const Json& j) {
  return guarded([&] {
    const SeriesHeader h = series_header(field(j, "ring"));
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) schema("\"entries\" must be an array");
    const std::size_t m = matrix_size(j, entries.size());
    SeriesMatrix g(m, SeriesElement(h.p, h.n_vars, h.trunc));
    for (std::size_t i = 0; i < m * m; ++i) g(i / m, i % m) = series_body(h, entries[i]);
    return g;
  });
}

Json to_json(const LieAlgebra& l) {
  Json field_json = "Q";
  if (l.field().kind == FieldDescriptor::Kind::PAdic) {
    field_json = Json{{"Qp", {{"p", l.field().p}, {"prec", l.field().precision}}}};
  }
  Json brackets = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t k = i + 1; k < l.dim(); ++k) {
      const QVector& v = l.structure(i, k);
      if (linalg::is_zero(v)) continue;
      Json c = Json::array();
      for (const Rational& q : v) c.push_back(rational_json(q));
      brackets.push_back(Json::array({i, k, c}));
    }
  }
  return Json{{"dim", l.dim()}, {"field", field_json}, {"brackets", brackets}};
}

LieAlgebra lie_from_json(const Json& j) {
  return guarded([&] {
    const long dim = small_int(field(j, "dim"), "dim");
    if (dim < 0) schema("dim must be >= 0");
    FieldDescriptor fd;
    const Json& f = field(j, "field");
    if (f.is_string()) {
      if (f.get<std::string>() != "Q") schema("field must be \"Q\" or {\"Qp\": {...}}");
    } else {
      const Json& qp = field(f, "Qp");
      const long p = small_int(field(qp, "p"), "p");
      const long prec = small_int(field(qp, "prec"), "prec");
      if (!is_odd_prime(static_cast<u64>(std::max(p, 0L))) || prec < 1) schema("Qp needs an odd prime p and prec >= 1");
      fd = FieldDescriptor::padic(static_cast<u64>(p), static_cast<int>(prec));
    }
    LieAlgebra l(static_cast<std::size_t>(dim), fd);
    const Json& brackets = field(j, "brackets");
    if (!brackets.is_array()) schema("\"brackets\" must be an array");
    std::set<std::pair<long, long>> seen;
    for (const Json& b : brackets) {
      if (!b.is_array() || b.size() != 3 || !b[2].is_array()) schema("brackets are [i, j, [c_1..c_d]]");
      const long i = small_int(b[0], "i"), k = small_int(b[1], "j");
      if (i < 0 || k >= dim || i >= k) schema("bracket indices need 0 <= i < j < dim");
      if (!seen.insert({i, k}).second) schema("repeated bracket");
      if (b[2].size() != static_cast<std::size_t>(dim)) schema("bracket vectors must have dim entries");
      QVector v;
      for (const Json& c : b[2]) v.push_back(rational(c));
      l.set_bracket(static_cast<std::size_t>(i), static_cast<std::size_t>(k), v);
    }
    return l;
  });
}

Json to_json(const GroupInertialCertificate& c) {
  return Json{{"y", to_json(c.y)}, {"x", to_json(c.x)}, {"a", to_json(c.a)}, {"k", c.k}};
}

GroupInertialCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    GroupInertialCertificate c{matrix_from_json(field(j, "y")), matrix_from_json(field(j, "x")),
                               scalar_from_json(field(j, "a")), 1};
    c.k = static_cast<int>(small_int(field(j, "k"), "k"));
    return c;
  });
}

Json to_json(const LocalPlan& plan) {
  Json j = to_json(plan.certificate);
  j["b"] = to_json(plan.b);
  j["alpha"] = to_json(plan.alpha);
  j["q_minus_1"] = to_json(plan.q_minus_1);
  return j;
}

SplittingBoundInput bound_input_from_json(const Json& j) {
  return guarded([&] {
    SplittingBoundInput in;
    const Json& d = field(j, "abs_discriminant");
    if (d.is_string()) {
      in.abs_discriminant = d.get<std::string>();
    } else if (d.is_number_integer()) {
      in.abs_discriminant = big_int(d, "abs_discriminant").get_str();
    } else {
      schema("abs_discriminant must be an integer or decimal string");
    }
    in.r1 = small_int(field(j, "r1"), "r1");
    in.r2 = small_int(field(j, "r2"), "r2");
    if (j.contains("prime_norms")) {
      if (!j["prime_norms"].is_array()) schema("prime_norms must be an array");
      for (const Json& n : j["prime_norms"]) in.prime_norms.push_back(small_int(n, "prime norm"));
    }
    if (j.contains("grh")) {
      if (!j["grh"].is_boolean()) schema("grh must be a boolean");
      in.grh = j["grh"].get<bool>();
    }
    return in;
  });
}

Json to_json(const SplittingBoundInput& in) {
  return Json{{"abs_discriminant", in.abs_discriminant}, {"r1", in.r1}, {"r2", in.r2},
              {"prime_norms", in.prime_norms}, {"grh", in.grh}};
}

Json to_json(const SplittingBoundResult& r) {
  return Json{{"alpha_finite", interval_json(r.alpha_finite)},
              {"alpha_infinite", interval_json(r.alpha_infinite)},
              {"threshold", interval_json(r.threshold)},
              {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const GSResult& r) {
  Json j{{"negative", r.negative}, {"min_t", rational_string(r.min_t)}, {"min_value", rational_string(r.min_value)}};
  j["witness_t"] = r.witness_t ? Json(rational_string(*r.witness_t)) : Json(nullptr);
  j["witness_value"] = r.witness_value ? Json(rational_string(*r.witness_value)) : Json(nullptr);
  return j;
}

Json pcentral_report(const FiniteQuotientGroup& g, const UniformityReport& u) {
  return Json{{"order", std::to_string(g.p()) + "^" + std::to_string(g.order_exponent())},
              {"dims", u.dims},
              {"uniform", u.uniform},
              {"window", u.window}};
}

Json to_json(const SuiteReport& r) {
  Json items = Json::array();
  for (const SuiteItem& it : r.items) {
    items.push_back(Json{{"anchor", it.anchor}, {"status", it.passed ? "pass" : "fail"}, {"detail", it.detail}});
  }
  return Json{{"suite", r.name}, {"passed", r.passed()}, {"items", items}, {"notes", r.notes}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    schema(path + ": " + e.what());
  }
}

}  // namespace tamelab::io
