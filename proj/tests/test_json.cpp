#include <functional>

#include "doctest.h"
#include "tamelab/json_io.hpp"

using namespace tamelab;
using io::Json;

namespace {

std::string fixture(const char* name) { return std::string(TAMELAB_FIXTURES) + "/" + name; }

bool same_table(const LieAlgebra& a, const LieAlgebra& b) {
  if (a.dim() != b.dim() || !(a.field() == b.field())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.structure(i, j) != b.structure(i, j)) return false;
  return true;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.kind();
  }
  return ErrorKind::DomainError;
}

// sl_m from elementary matrices, in the same basis order as LieAlgebra::slm.
LieAlgebra sl_from_matrices(std::size_t m) {
  std::vector<QMatrix> basis;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    QMatrix h(m, m);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(h);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) {
        QMatrix e(m, m);
        e(i, j) = 1;
        basis.push_back(e);
      }
  return LieAlgebra::from_matrices(basis);
}

}  // namespace

TEST_CASE("scalar and series round trips") {
  const PadicScalar x(5, 6, -7);
  const Json j = io::to_json(x);
  CHECK(j.dump() == R"({"p":5,"prec":6,"value":"15618"})");
  CHECK(io::scalar_from_json(j) == x);
  CHECK(io::scalar_from_json(Json::parse(R"({"p":5,"prec":6,"value":-7})")) == x);
  CHECK(io::scalar_from_json(Json::parse(R"({"p":5,"prec":6,"value":"1000000000000000000000"})")) ==
        PadicScalar::from_residue(5, 6, 0));

  const SeriesElement t = SeriesElement::monomial(3, 2, 3, {1, 0}, 1);
  const SeriesElement s = t * t + SeriesElement::monomial(3, 2, 3, {0, 1}, -1) + SeriesElement::constant(3, 2, 3, 4);
  const Json js = io::to_json(s);
  CHECK(js["coeffs"].dump() == R"([[[0,0],"4"],[[0,1],"8"],[[2,0],"1"]])");
  CHECK(io::series_from_json(js) == s);
}

TEST_CASE("matrix round trips") {
  const ScalarMatrix g = ScalarMatrix::from_ints(PadicScalar(5, 3, 0), {{1, 5}, {0, 1}});
  const Json j = io::to_json(g);
  CHECK(j.dump() == R"({"ring":{"p":5,"prec":3},"m":2,"entries":["1","5","0","1"]})");
  CHECK(io::matrix_from_json(j) == g);

  const SeriesElement t = SeriesElement::monomial(3, 1, 3, {1}, 1);
  SeriesMatrix h(2, t.one_like());
  h(0, 0) = t.one_like();
  h(0, 1) = t;
  h(1, 1) = t.one_like() + t * t;
  CHECK(io::series_matrix_from_json(io::to_json(h)) == h);
}

TEST_CASE("certificate and plan JSON") {
  // x y x^-1 y^-1 = y^(u^2 - 1) for x = diag(u, u^-1), y unipotent; u = 6 gives 35 = 7 * 5.
  const PadicScalar zero(5, 4, 0);
  ScalarMatrix x = ScalarMatrix::from_ints(zero, {{6, 0}, {0, 1}});
  x(1, 1) = zero.from_int_like(6).inverse();
  const GroupInertialCertificate c{ScalarMatrix::from_ints(zero, {{1, 5}, {0, 1}}), x, zero.from_int_like(7), 1};
  REQUIRE(verify_certificate(c));
  const GroupInertialCertificate back = io::certificate_from_json(io::to_json(c));
  CHECK(back.y == c.y);
  CHECK(back.x == c.x);
  CHECK(back.a == c.a);
  CHECK(back.k == 1);
  CHECK(verify_certificate(back));

  const LocalPlan plan = build_local_plan(back, zero.from_int_like(3));
  const Json j = io::to_json(plan);
  CHECK(j["q_minus_1"]["value"] == "15");
  CHECK(io::scalar_from_json(j["alpha"]) == plan.alpha);
  CHECK(io::scalar_from_json(j["b"]) == zero.from_int_like(3));
  CHECK(verify_plan(plan));
}

TEST_CASE("Lie algebra schema") {
  const Json j = Json::parse(R"({"dim": 2, "field": "Q", "brackets": [[0, 1, [0, 1]]]})");
  CHECK(same_table(io::lie_from_json(j), LieAlgebra::solvable2()));
  const LieAlgebra half = io::lie_from_json(Json::parse(R"({"dim": 2, "field": {"Qp": {"p": 7, "prec": 5}}, "brackets": [[0, 1, ["1/2", 0]]]})"));
  CHECK(half.structure(0, 1)[0] == Rational(1, 2));
  CHECK(half.structure(1, 0)[0] == Rational(-1, 2));
  CHECK(half.field() == FieldDescriptor::padic(7, 5));
  CHECK(io::to_json(half).dump() == R"({"dim":2,"field":{"Qp":{"p":7,"prec":5}},"brackets":[[0,1,["1/2",0]]]})");

  const char* bad[] = {
      R"({"field": "Q", "brackets": []})",
      R"({"dim": 2, "field": "R", "brackets": []})",
      R"({"dim": 2, "field": {"Qp": {"p": 4, "prec": 3}}, "brackets": []})",
      R"({"dim": 2, "field": "Q", "brackets": [[1, 0, [0, 1]]]})",
      R"({"dim": 2, "field": "Q", "brackets": [[0, 2, [0, 1]]]})",
      R"({"dim": 2, "field": "Q", "brackets": [[0, 1, [0]]]})",
      R"({"dim": 2, "field": "Q", "brackets": [[0, 1, [0, 1]], [0, 1, [0, 1]]]})",
      R"({"dim": 2, "field": "Q", "brackets": [[0, 1, [0, 1.5]]]})",
      R"({"dim": 2, "field": "Q", "brackets": [[0, 1, [0, "1/0"]]]})",
      R"({"dim": "2", "field": "Q", "brackets": []})",
  };
  for (const char* s : bad) {
    INFO(s);
    CHECK(kind_of([&] { io::lie_from_json(Json::parse(s)); }) == ErrorKind::SchemaError);
  }
}

TEST_CASE("schema errors on other inputs") {
  CHECK(kind_of([] { io::scalar_from_json(Json::parse(R"({"p": 5, "value": 1})")); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { io::scalar_from_json(Json::parse(R"({"p": 5, "prec": 2, "value": "x1"})")); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { io::matrix_from_json(Json::parse(R"({"ring": {"p": 5, "prec": 2}, "m": 2, "entries": ["1"]})")); }) ==
        ErrorKind::SchemaError);
  CHECK(kind_of([] { io::series_from_json(Json::parse(R"({"p": 3, "n_vars": 1, "trunc": 2, "coeffs": [[[2], "1"]]})")); }) ==
        ErrorKind::SchemaError);
  CHECK(kind_of([] { io::bound_input_from_json(Json::parse(R"({"abs_discriminant": 1, "r1": 1})")); }) == ErrorKind::SchemaError);
  CHECK(kind_of([] { io::read_file("/nonexistent/file.json"); }) == ErrorKind::SchemaError);
}

TEST_CASE("bound JSON") {
  const SplittingBoundInput in = io::bound_input_from_json(Json::parse(R"({"abs_discriminant": 1, "r1": 1, "r2": 0})"));
  CHECK(in.abs_discriminant == "1");
  CHECK(in.prime_norms.empty());
  CHECK_FALSE(in.grh);
  const Json out = io::to_json(splitting_bound(in));
  CHECK(out["verdict"] == "true");
  CHECK(out["threshold"]["lo"].get<std::string>().rfind("0", 0) == 0);
  const GSResult gs = gs_negative(2, {9}, 100);
  const Json g = io::to_json(gs);
  CHECK(g["negative"] == true);
  CHECK(g["witness_t"] == "83/100");
  CHECK(io::to_json(gs_negative(1, {}, 10))["witness_t"].is_null());
}

TEST_CASE("fixtures match the built-in constructors") {
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("sl2.json"))), LieAlgebra::sl2()));
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("sl3.json"))), sl_from_matrices(3)));
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("sl4.json"))), sl_from_matrices(4)));
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("quaternion_2_5.json"))), LieAlgebra::quaternion(2, 5)));
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("quaternion_2_3.json"))), LieAlgebra::quaternion(2, 3)));
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("abelian3.json"))), LieAlgebra::abelian(3)));
  CHECK(same_table(io::lie_from_json(io::read_file(fixture("solvable2.json"))), LieAlgebra::solvable2()));
  for (const char* name : {"sl2.json", "sl3.json", "sl4.json", "quaternion_2_5.json", "quaternion_2_3.json", "abelian3.json",
                           "solvable2.json"}) {
    INFO(name);
    CHECK(validate(io::lie_from_json(io::read_file(fixture(name)))).violation == ValidationReport::Violation::None);
  }
}
