#include <random>

#include "doctest.h"
#include "tamelab/pcentral.hpp"

using namespace tamelab;

namespace {

ScalarMatrix mat(u64 p, int n, const std::vector<std::vector<i64>>& rows) {
  return ScalarMatrix::from_ints(PadicScalar(p, n, 0), rows);
}

// Two commuting order-p matrices deep in SL_2^1 mod p^4: an elementary abelian (Z/p)^2.
std::vector<ScalarMatrix> elementary_abelian_gens(u64 p) {
  const auto c = static_cast<i64>(p * p * p);
  return {mat(p, 4, {{1, c}, {0, 1}}), mat(p, 4, {{1, 0}, {c, 1}})};
}

ScalarMatrix random_lie_element(u64 p, int n, std::mt19937_64& rng) {
  // Trace-zero X = 0 mod p.
  const u64 mod = checked_pow(p, n);
  const auto r = [&] { return static_cast<i64>((rng() % mod) * p % mod); };
  const i64 a = r();
  return mat(p, n, {{a, r()}, {r(), -a}});
}

}  // namespace

TEST_CASE("closure examples") {
  CHECK(FiniteQuotientGroup::closure({ScalarMatrix::identity(2, PadicScalar(3, 3, 0))}).order() == 1);

  // Oracle: power [[1,p],[0,1]] mod p^3 until the identity comes back.
  const ScalarMatrix x = mat(5, 3, {{1, 5}, {0, 1}});
  std::size_t period = 1;
  for (ScalarMatrix y = x; !y.is_identity(); y = y * x) ++period;
  CHECK(period == 25);
  CHECK(FiniteQuotientGroup::closure({x}).order() == period);

  // Oracle: every M = I mod 3 with det = 1 mod 9.
  std::size_t brute = 0;
  for (i64 a = 0; a < 3; ++a)
    for (i64 b = 0; b < 3; ++b)
      for (i64 c = 0; c < 3; ++c)
        for (i64 d = 0; d < 3; ++d) {
          const i64 det = (1 + 3 * a) * (1 + 3 * d) - 9 * b * c;
          if (((det - 1) % 9 + 9) % 9 == 0) ++brute;
        }
  CHECK(brute == 27);
  const auto g = FiniteQuotientGroup::closure(sl_congruence_generators(2, 3, 2));
  CHECK(g.order() == brute);
  CHECK(g.order_exponent() == 3);
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(FiniteQuotientGroup::closure(sl_congruence_generators(2, 3, 4), 100), AlgebraError);
  try {
    (void)FiniteQuotientGroup::closure(sl_congruence_generators(2, 3, 4), 100);
  } catch (const AlgebraError& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
  CHECK_THROWS_AS(FiniteQuotientGroup::closure({mat(3, 3, {{2, 0}, {0, 2}})}), AlgebraError);
}

TEST_CASE("SL_2^1 mod 3^4: p-central series equals the congruence filtration") {
  const auto g = FiniteQuotientGroup::closure(sl_congruence_generators(2, 3, 4));
  CHECK(g.order_exponent() == 9);
  const PCentralChain chain = pcentral_series(g);
  REQUIRE(chain.terms.size() == 4);
  for (int n = 1; n <= 3; ++n) {
    CHECK(chain.terms[static_cast<std::size_t>(n - 1)] == depth_filtration(g, n));
  }
  CHECK(chain.dims == std::vector<int>{3, 3, 3});
  for (const auto& term : chain.terms) {
    std::size_t o = term.order();
    while (o % 3 == 0) o /= 3;
    CHECK(o == 1);
  }
  // gr_n is elementary abelian: p-th powers and commutators of P_n fall in P_{n+1}.
  for (std::size_t n = 0; n + 1 < chain.terms.size(); ++n) {
    const Subgroup& pn = chain.terms[n];
    const Subgroup& pn1 = chain.terms[n + 1];
    for (std::size_t k = 0; k < pn.elements.size(); k += 37) {
      const std::size_t h = pn.elements[k];
      CHECK(pn1.contains(g.power(h, 3)));
      for (std::size_t k2 = 0; k2 < pn.elements.size(); k2 += 211) CHECK(pn1.contains(g.commutator(pn.elements[k2], h)));
    }
  }
}

TEST_CASE("elementary abelian group: P_2 is trivial and uniformity fails") {
  const auto g = FiniteQuotientGroup::closure(elementary_abelian_gens(5));
  CHECK(g.order() == 25);
  const PCentralChain chain = pcentral_series(g);
  REQUIRE(chain.terms.size() == 2);
  CHECK(chain.terms[1].order() == 1);
  const UniformityReport r = uniformity_check(g, 1);
  CHECK(r.quotient_abelian);
  CHECK_FALSE(r.uniform);
  CHECK_FALSE(r.levels[0].bijective);
  CHECK(r.levels[0].dim == 2);
  CHECK(r.levels[0].next_dim == 0);
}

TEST_CASE("uniformity of SL_2^1 mod 3^4 and window headroom") {
  const auto g = FiniteQuotientGroup::closure(sl_congruence_generators(2, 3, 4));
  const UniformityReport r = uniformity_check(g, 2);
  CHECK(r.uniform);
  CHECK(r.quotient_abelian);
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[0].dim == 3);
  CHECK(r.levels[1].dim == 3);
  CHECK_THROWS_AS(uniformity_check(g, 3), AlgebraError);
  const auto small = FiniteQuotientGroup::closure(sl_congruence_generators(2, 3, 2));
  CHECK_THROWS_AS(uniformity_check(small, 1), AlgebraError);
}

TEST_CASE("semidirect product <t> x| (Z/p^2)^(p-1) is not uniform") {
  const auto gens = semidirect_example_generators(3);
  const ScalarMatrix& t = gens[0];
  const ScalarMatrix& a1 = gens[1];
  // The printed action: t a_1 t^-1 = a_2, t a_2 t^-1 = (a_1 a_2)^-1, t^p = (a_1 t)^p = 1.
  const ScalarMatrix a2 = t * a1 * t.inverse();
  CHECK(t * a2 * t.inverse() == (a1 * a2).inverse());
  CHECK(int_power(t, 3).is_identity());
  CHECK(int_power(a1 * t, 3).is_identity());
  const auto g = FiniteQuotientGroup::closure(gens, default_closure_limit(),
                                              FiniteQuotientGroup::DepthPolicy::AllowAny);
  CHECK(g.order() == 243);
  const UniformityReport r = uniformity_check(g, 1);
  CHECK_FALSE(r.uniform);
}

TEST_CASE("d_1 is the Frattini rank: redundant generators do not change the closure") {
  const auto base = sl_congruence_generators(2, 3, 3);
  std::vector<ScalarMatrix> gens = base;
  gens.push_back(base[0] * base[1]);
  const auto g = FiniteQuotientGroup::closure(gens);
  const PCentralChain chain = pcentral_series(g);
  CHECK(chain.dims.front() == 3);
  CHECK(gens.size() == 4);
  const auto reduced = FiniteQuotientGroup::closure(base);
  CHECK(reduced.order() == g.order());
}

TEST_CASE("dictionary bracket: commuting pair gives zero") {
  const ScalarMatrix x = mat(5, 6, {{1, 5}, {0, 1}});
  const DictionaryBracket b = dictionary_bracket(x, int_power(x, 7), 2);
  CHECK(matrix_depth(b.value) == 6);
}

TEST_CASE("dictionary bracket matches the matrix bracket of logs") {
  std::mt19937_64 rng(77);
  const u64 p = 5;
  const int n = 6;
  for (int t = 0; t < 20; ++t) {
    const ScalarMatrix g = mat_exp(random_lie_element(p, n, rng));
    const ScalarMatrix h = mat_exp(random_lie_element(p, n, rng));
    const DictionaryBracket b = dictionary_bracket(g, h, 3);
    CHECK(b.certified_levels >= n - 2);
    const ScalarMatrix oracle = matrix_bracket(mat_log(g), mat_log(h));
    CHECK(matrix_depth(b.value - oracle) >= b.certified_levels);
    // Antisymmetry.
    const DictionaryBracket swapped = dictionary_bracket(h, g, 3);
    CHECK(matrix_depth(b.value + swapped.value) >= std::min(b.certified_levels, swapped.certified_levels));
  }
}

TEST_CASE("dictionary bracket is additive in the second argument") {
  std::mt19937_64 rng(78);
  const u64 p = 5;
  const int n = 6;
  for (int t = 0; t < 10; ++t) {
    const ScalarMatrix x = random_lie_element(p, n, rng);
    const ScalarMatrix y1 = random_lie_element(p, n, rng);
    const ScalarMatrix y2 = random_lie_element(p, n, rng);
    const auto b1 = dictionary_bracket(mat_exp(x), mat_exp(y1), 3);
    const auto b2 = dictionary_bracket(mat_exp(x), mat_exp(y2), 3);
    const auto b12 = dictionary_bracket(mat_exp(x), mat_exp(y1 + y2), 3);
    const int cert = std::min({b1.certified_levels, b2.certified_levels, b12.certified_levels});
    CHECK(matrix_depth(b12.value - b1.value - b2.value) >= cert);
  }
}

TEST_CASE("dictionary bracket on the quaternion lattice points along log z") {
  const u64 p = 5;
  const int n = 4;
  const i64 a = 2;
  const ScalarMatrix am = mat(p, n, {{0, 5, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -5}, {0, 0, -1, 0}});
  const ScalarMatrix bm = mat(p, n, {{0, 0, a, 0}, {0, 0, 0, a}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const PadicScalar pp(p, n, static_cast<i64>(p));
  const ScalarMatrix x = mat_exp(pp * am), y = mat_exp(pp * bm), z = mat_exp(pp * (am * bm));
  const DictionaryBracket b = dictionary_bracket(x, y, 2);
  CHECK(b.certified_levels >= 2);
  const ScalarMatrix oracle = matrix_bracket(mat_log(x), mat_log(y));
  CHECK(matrix_depth(b.value - oracle) >= b.certified_levels);
  // Find c with value = c * log z at the certified precision; it must be nonzero.
  const ScalarMatrix lz = mat_log(z);
  bool found = false;
  const u64 mod = checked_pow(p, n);
  for (u64 c = 1; c < mod && !found; ++c) {
    const ScalarMatrix diff = b.value - PadicScalar::from_residue(p, n, c) * lz;
    found = matrix_depth(diff) >= b.certified_levels;
  }
  CHECK(found);
}

TEST_CASE("dictionary bracket errors") {
  const ScalarMatrix x = mat(5, 4, {{1, 5}, {0, 1}});
  CHECK_THROWS_AS(dictionary_bracket(x, mat(5, 4, {{2, 0}, {0, 3}}), 1), AlgebraError);
  CHECK_THROWS_AS(dictionary_bracket(x, x, 0), AlgebraError);
  CHECK_THROWS_AS(dictionary_bracket(mat(7, 20, {{1, 7}, {0, 1}}), mat(7, 20, {{1, 0}, {7, 1}}), 2), AlgebraError);
}
