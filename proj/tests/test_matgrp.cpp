#include <random>

#include "doctest.h"
#include "tamelab/matrix.hpp"

using namespace tamelab;

namespace {

ScalarMatrix mat(u64 p, int n, const std::vector<std::vector<i64>>& rows) {
  return ScalarMatrix::from_ints(PadicScalar(p, n, 0), rows);
}

ScalarMatrix random_word(const std::vector<ScalarMatrix>& gens, std::mt19937_64& rng, int len) {
  ScalarMatrix g = ScalarMatrix::identity(gens[0].size(), gens[0].proto());
  for (int i = 0; i < len; ++i) {
    const ScalarMatrix& s = gens[rng() % gens.size()];
    g = (rng() % 2 == 0) ? g * s : g * s.inverse();
  }
  return g;
}

}  // namespace

TEST_CASE("inverse and determinant basics") {
  const ScalarMatrix id = ScalarMatrix::identity(3, PadicScalar(5, 4, 0));
  CHECK(id.inverse() == id);
  const ScalarMatrix x = mat(5, 4, {{1, 5}, {0, 1}});
  CHECK(x.det() == PadicScalar(5, 4, 1));
  CHECK(x.inverse() == mat(5, 4, {{1, -5}, {0, 1}}));
  CHECK_THROWS_AS(mat(5, 4, {{5, 0}, {0, 1}}).inverse(), AlgebraError);
}

TEST_CASE("inverse(g) * g = I on random words in the congruence generators") {
  std::mt19937_64 rng(17);
  for (std::size_t m : {2u, 3u, 4u, 5u}) {
    const auto gens = sl_congruence_generators(m, 5, 4);
    for (int t = 0; t < (m == 5 ? 20 : 100); ++t) {
      const ScalarMatrix g = random_word(gens, rng, 6);
      const ScalarMatrix id = ScalarMatrix::identity(m, g.proto());
      CHECK(g.inverse() * g == id);
      CHECK(g * g.inverse() == id);
      CHECK(g.det() == g.proto().one_like());
    }
  }
}

TEST_CASE("commutator examples") {
  const u64 p = 5;
  const int n = 4;
  const PadicScalar proto(p, n, 0);
  const PadicScalar qnorm = proto.from_int_like(1 + 25);
  const PadicScalar alpha = hensel_sqrt(qnorm);
  ScalarMatrix s(2, proto);
  s(0, 0) = alpha;
  s(1, 1) = alpha.inverse();
  const ScalarMatrix x = mat(p, n, {{1, 5}, {0, 1}});
  CHECK(commutator(x, x).is_identity());
  CHECK(commutator(s, x) == int_power(x, 25));

  // [t, z] = z^(N(q) - 1) with t symmetric (the determinant-one form).
  const PadicScalar two_inv = proto.from_int_like(2).inverse();
  const PadicScalar c = (alpha + alpha.inverse()) * two_inv;
  const PadicScalar d = (alpha.inverse() - alpha) * two_inv;
  ScalarMatrix t(2, proto);
  t(0, 0) = c;
  t(0, 1) = d;
  t(1, 0) = d;
  t(1, 1) = c;
  const ScalarMatrix z = mat(p, n, {{6, 5}, {-5, -4}});
  CHECK(t.det() == proto.one_like());
  CHECK(commutator(t, z) == int_power(z, 25));
}

TEST_CASE("commutator inverse swaps arguments") {
  std::mt19937_64 rng(3);
  const auto gens = sl_congruence_generators(3, 3, 4);
  for (int t = 0; t < 50; ++t) {
    const ScalarMatrix g = random_word(gens, rng, 5), h = random_word(gens, rng, 5);
    CHECK(commutator(g, h).inverse() == commutator(h, g));
  }
}

TEST_CASE("zp_power examples and additivity") {
  const ScalarMatrix x = mat(5, 4, {{1, 5}, {0, 1}});
  const PadicScalar zero(5, 4, 0);
  CHECK(zp_power(x, zero).is_identity());
  CHECK(zp_power(x, zero.one_like()) == x);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const PadicScalar a = PadicScalar::from_residue(5, 4, rng() % 625);
    const PadicScalar b = PadicScalar::from_residue(5, 4, rng() % 625);
    // Oracle: direct binary powering on the integer representatives.
    const ScalarMatrix lhs = int_power(x, static_cast<i64>(a.value())) * int_power(x, static_cast<i64>(b.value()));
    CHECK(zp_power(x, a) * zp_power(x, b) == lhs);
    CHECK(zp_power(x, a + b) == lhs);
  }
  CHECK_THROWS_AS(zp_power(mat(5, 4, {{2, 0}, {0, 3}}), zero), AlgebraError);
  CHECK_THROWS_AS(zp_power(x, PadicScalar(5, 1, 1)), AlgebraError);
  CHECK(int_power(x, -3) == mat(5, 4, {{1, -15}, {0, 1}}));
}

TEST_CASE("mat_exp and mat_log") {
  const PadicScalar proto(5, 4, 0);
  CHECK(mat_exp(ScalarMatrix(3, proto)).is_identity());
  CHECK_THROWS_AS(mat_exp(mat(5, 4, {{1, 0}, {0, 0}})), AlgebraError);
  CHECK_THROWS_AS(mat_log(mat(5, 4, {{2, 0}, {0, 1}})), AlgebraError);

  const ScalarMatrix pe = mat(5, 4, {{0, 5}, {0, 0}});
  CHECK(mat_log(mat_exp(pe)) == pe);
  CHECK(mat_exp(pe) == mat(5, 4, {{1, 5}, {0, 1}}));

  // x = exp(pA) for the 4x4 A built from U = [[0, p], [1, 0]].
  const ScalarMatrix a = mat(5, 4, {{0, 5, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -5}, {0, 0, -1, 0}});
  const ScalarMatrix x = mat_exp(proto.from_int_like(5) * a);
  CHECK(x.det() == proto.one_like());
  CHECK(congruence_depth(x) >= 1);
  CHECK(mat_log(x) == proto.from_int_like(5) * a);
}

TEST_CASE("exp/log round trips, det = exp(trace), commuting sums") {
  std::mt19937_64 rng(21);
  for (u64 p : {3u, 5u, 7u}) {
    const int n = 5;
    const PadicScalar proto(p, n, 0);
    const u64 mod = checked_pow(p, n);
    for (int t = 0; t < 30; ++t) {
      ScalarMatrix xm(3, proto);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) xm(i, j) = PadicScalar::from_residue(p, n, (rng() % mod) * p % mod);
      }
      const ScalarMatrix g = mat_exp(xm);
      CHECK(mat_log(g) == xm);
      CHECK(g.det() == pexp(xm.trace()));
      // X commutes with 2X + X^2.
      const ScalarMatrix y = proto.from_int_like(2) * xm + xm * xm;
      CHECK(mat_exp(xm) * mat_exp(y) == mat_exp(xm + y));
    }
  }
}

TEST_CASE("sl_congruence_generators") {
  const auto g2 = sl_congruence_generators(2, 3, 4);
  CHECK(g2.size() == 3);
  for (const auto& g : g2) CHECK(mat_log(g).trace().is_zero());
  for (std::size_t m = 2; m <= 4; ++m) {
    const auto gens = sl_congruence_generators(m, 5, 3);
    CHECK(gens.size() == m * m - 1);
    for (const auto& g : gens) {
      CHECK(congruence_depth(g) == 1);
      CHECK(g.det() == g.proto().one_like());
    }
  }
  // exp(E_1) = I + E_1 since E_1 is nilpotent: the z of the SL_2 example.
  CHECK(g2[2] == mat(3, 4, {{4, 3}, {-3, -2}}));
  CHECK_THROWS_AS(sl_congruence_generators(1, 3, 4), AlgebraError);
}

TEST_CASE("congruence depth and p-th powers") {
  CHECK(congruence_depth(ScalarMatrix::identity(2, PadicScalar(3, 5, 0))) == 5);
  CHECK(congruence_depth(mat(3, 5, {{1, 3}, {0, 1}})) == 1);
  std::mt19937_64 rng(4);
  for (u64 p : {3u, 5u}) {
    const auto gens = sl_congruence_generators(2, p, 5);
    for (int t = 0; t < 60; ++t) {
      ScalarMatrix g = random_word(gens, rng, 4);
      g = int_power(g, static_cast<i64>(checked_pow(p, static_cast<int>(rng() % 3))));
      const int d = congruence_depth(g);
      if (d >= g.precision()) continue;
      CHECK(congruence_depth(int_power(g, static_cast<i64>(p))) >= d + 1);
    }
  }
}

TEST_CASE("series matrices: commutators and p-th powers with m-adic depth") {
  const u64 p = 3;
  const int n_vars = 1, trunc = 4;
  const SeriesElement proto(p, n_vars, trunc);
  const SeriesElement t = SeriesElement::monomial(p, n_vars, trunc, {1}, 1);
  const SeriesElement one = proto.one_like();
  SeriesMatrix upper = SeriesMatrix::identity(2, proto), lower = upper;
  upper(0, 1) = t;
  lower(1, 0) = t + proto.from_int_like(3);
  CHECK(congruence_depth(upper) == 1);
  CHECK(congruence_depth(int_power(upper, 3)) == 2);
  CHECK(congruence_depth(int_power(upper, 27)) == trunc);
  const SeriesMatrix c = commutator(upper, lower);
  CHECK(c.inverse() == commutator(lower, upper));
  CHECK(congruence_depth(c) >= 2);
  CHECK(c.det() == one);
  const SeriesMatrix g = upper * lower * upper;
  CHECK(congruence_depth(int_power(g, 3)) >= congruence_depth(g) + 1);
  CHECK(zp_power(upper, PadicScalar(p, 3, 2)) == upper * upper);
}
