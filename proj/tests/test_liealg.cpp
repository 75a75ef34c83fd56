#include <random>

#include "doctest.h"
#include "tamelab/lie.hpp"

using namespace tamelab;

namespace {

QVector vec(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

QMatrix qmat(const std::vector<std::vector<long>>& rows) {
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rational det3(const QMatrix& k) {
  return k(0, 0) * (k(1, 1) * k(2, 2) - k(1, 2) * k(2, 1)) - k(0, 1) * (k(1, 0) * k(2, 2) - k(1, 2) * k(2, 0)) +
         k(0, 2) * (k(1, 0) * k(2, 1) - k(1, 1) * k(2, 0));
}

/// Is ad_y(x) = -y solvable over F_q? Exhaustive over x in F_q^3.
bool feasible_mod(const LieAlgebra& l, const QVector& y, long q) {
  const QMatrix a = l.ad(y);
  auto red = [q](const Rational& r) -> long {
    mpz_class n = r.get_num() % q, d = r.get_den() % q;
    if (n < 0) n += q;
    if (d < 0) d += q;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mpz_class(q).get_mpz_t()) == 0) return -1;
    return mpz_class(n * inv % q).get_si();
  };
  long am[3][3], b[3];
  for (int i = 0; i < 3; ++i) {
    b[i] = red(-y[static_cast<std::size_t>(i)]);
    for (int j = 0; j < 3; ++j) am[i][j] = red(a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }
  for (long x0 = 0; x0 < q; ++x0)
    for (long x1 = 0; x1 < q; ++x1)
      for (long x2 = 0; x2 < q; ++x2) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = (am[i][0] * x0 + am[i][1] * x1 + am[i][2] * x2 - b[i]) % q == 0;
        if (ok) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(LieAlgebra::abelian(3)).ok());
  CHECK(validate(LieAlgebra::sl2()).ok());
  CHECK(validate(LieAlgebra::quaternion(2, 5)).ok());
  CHECK(validate(LieAlgebra::slm(3)).ok());

  LieAlgebra bad = LieAlgebra::sl2();
  bad.set_bracket(1, 2, vec({0, 1, 0}));  // [e, f] = e
  const ValidationReport r = validate(bad);
  CHECK(r.violation == ValidationReport::Violation::Jacobi);
  CHECK((r.i == 0 && r.j == 1 && r.k == 2));
  CHECK_THROWS_AS(require_valid(bad), AlgebraError);

  LieAlgebra skew(2);
  skew.set_raw(0, 1, vec({0, 1}));
  CHECK(validate(skew).violation == ValidationReport::Violation::Antisymmetry);
}

TEST_CASE("slm(2) is the (h, e, f) table and sl_m has the right dimension") {
  const LieAlgebra a = LieAlgebra::slm(2), b = LieAlgebra::sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(a.structure(i, j) == b.structure(i, j));
  CHECK(LieAlgebra::slm(3).dim() == 8);
  CHECK(LieAlgebra::slm(4).dim() == 15);
}

TEST_CASE("perfectness and derived subalgebra") {
  CHECK(derived_subalgebra(LieAlgebra::abelian(3)).empty());
  CHECK_FALSE(is_perfect(LieAlgebra::abelian(3)));
  CHECK(is_perfect(LieAlgebra::sl2()));
  CHECK(is_perfect(LieAlgebra::quaternion(2, 5)));
  CHECK(is_perfect(LieAlgebra::slm(4)));
  CHECK(derived_subalgebra(LieAlgebra::solvable2()).size() == 1);
}

TEST_CASE("Killing form and radical") {
  const LieAlgebra sl2 = LieAlgebra::sl2();
  const QMatrix k = killing_form(sl2);
  CHECK(k == qmat({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  CHECK(det3(k) == -128);
  CHECK(radical(sl2).empty());
  CHECK(radical(LieAlgebra::abelian(3)).size() == 3);
  CHECK(radical(LieAlgebra::solvable2()).size() == 2);
  CHECK(radical(LieAlgebra::quaternion(2, 3)).empty());
  CHECK(radical(LieAlgebra::slm(3)).empty());
}

TEST_CASE("ad is a derivation and the Killing form is invariant") {
  for (const LieAlgebra& l : {LieAlgebra::slm(3), LieAlgebra::quaternion(2, 5), LieAlgebra::solvable2()}) {
    const auto vs = sample_vectors(l.dim(), 60, 11);
    for (std::size_t t = 0; t + 2 < vs.size(); t += 3) {
      const QVector &x = vs[t], &y = vs[t + 1], &z = vs[t + 2];
      QVector rhs = l.bracket(l.bracket(x, y), z);
      const QVector r2 = l.bracket(y, l.bracket(x, z));
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += r2[i];
      CHECK(l.bracket(x, l.bracket(y, z)) == rhs);
      CHECK(killing(l, l.bracket(x, y), z) == killing(l, x, l.bracket(y, z)));
      CHECK(killing(l, x, y) == killing(l, y, x));
    }
  }
}

TEST_CASE("polynomial helpers") {
  // (t - 2)^2 (t + 1/3)
  const QPoly p{Rational(4, 3), Rational(8, 3), Rational(-11, 3), Rational(1)};
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-1, 3));
  CHECK(roots[1] == 2);
  CHECK(poly_gcd(p, poly_derivative(p)) == QPoly{Rational(-2), Rational(1)});
  CHECK(rational_roots(QPoly{Rational(-2), Rational(0), Rational(1)}).empty());
  CHECK(minimal_polynomial(QMatrix::identity(4) + QMatrix::identity(4)) == QPoly{Rational(-2), Rational(1)});
}

TEST_CASE("ad_semisimple") {
  const LieAlgebra sl2 = LieAlgebra::sl2();
  CHECK(ad_semisimple(sl2, vec({0, 0, 0})));
  CHECK(ad_semisimple(sl2, vec({1, 0, 0})));
  CHECK_FALSE(ad_semisimple(sl2, vec({0, 1, 0})));
  CHECK(minimal_polynomial(sl2.ad(vec({0, 1, 0}))) == QPoly{0, 0, 0, 1});
  for (auto [a, p] : {std::pair{2L, 5L}, std::pair{2L, 3L}}) {
    const LieAlgebra d0 = LieAlgebra::quaternion(a, p);
    for (const auto& x : sample_vectors(3, 50, 5)) CHECK(ad_semisimple(d0, x));
  }
}

TEST_CASE("inertial_solve") {
  const LieAlgebra sl2 = LieAlgebra::sl2();
  const auto c = inertial_solve(sl2, vec({0, 1, 0}));
  REQUIRE(c);
  CHECK(c->x == vec({1, 0, 0}));
  CHECK(c->lambda == 2);
  CHECK(verify_certificate(sl2, *c));
  const auto cf = inertial_solve(sl2, vec({0, 0, 1}));
  REQUIRE(cf);
  CHECK(verify_certificate(sl2, *cf));
  CHECK_FALSE(inertial_solve(sl2, vec({1, 0, 0})));

  for (std::size_t i = 0; i < 3; ++i) {
    CHECK_FALSE(inertial_solve(LieAlgebra::abelian(3), LieAlgebra::abelian(3).basis_vector(i)));
    CHECK_FALSE(inertial_solve(LieAlgebra::quaternion(2, 5), LieAlgebra::quaternion(2, 5).basis_vector(i)));
  }
  CHECK_THROWS_AS(inertial_solve(sl2, vec({0, 0, 0})), AlgebraError);
  CHECK_FALSE(verify_certificate(sl2, {vec({0, 1, 0}), vec({1, 0, 0}), Rational(1)}));
}

TEST_CASE("inertial_solve soundness and completeness against F_q reduction") {
  const std::vector<LieAlgebra> algebras{LieAlgebra::sl2(), LieAlgebra::quaternion(2, 5), LieAlgebra::quaternion(1, 3)};
  int feasible_seen = 0, infeasible_seen = 0;
  for (const auto& l : algebras) {
    for (const auto& y : sample_vectors(3, 40, 23)) {
      const auto c = inertial_solve(l, y);
      if (c) CHECK(verify_certificate(l, *c));
      int votes = 0;
      for (long q : {11L, 13L, 17L, 19L}) votes += feasible_mod(l, y, q) ? 1 : 0;
      if (c) {
        ++feasible_seen;
        CHECK(votes >= 3);
      } else {
        ++infeasible_seen;
        CHECK(votes <= 1);
      }
    }
  }
  CHECK(feasible_seen > 0);
  CHECK(infeasible_seen > 0);
}

TEST_CASE("inertial_span") {
  for (std::size_t m = 2; m <= 4; ++m) {
    const LieAlgebra l = LieAlgebra::slm(m);
    const InertialSpan s = inertial_span(l, 20, 1);
    CHECK(s.certified);
    CHECK(s.certificates.size() == l.dim());
    std::vector<QVector> ys;
    for (const auto& c : s.certificates) {
      CHECK(verify_certificate(l, c));
      ys.push_back(c.y);
    }
    CHECK(linalg::row_basis(ys, l.dim()).size() == l.dim());
  }
  const InertialSpan ab = inertial_span(LieAlgebra::abelian(3), 20, 1);
  CHECK_FALSE(ab.certified);
  CHECK(ab.harvested == 0);
  CHECK_FALSE(inertial_span(LieAlgebra::quaternion(2, 5), 50, 3).certified);
}

TEST_CASE("is_toral_sampled") {
  const ToralSample s = is_toral_sampled(LieAlgebra::sl2(), 200, 42);
  CHECK(s.not_toral);
  REQUIRE(s.witness);
  CHECK(*s.witness == vec({0, 1, 0}));
  for (auto [a, p] : {std::pair{2L, 5L}, std::pair{2L, 3L}}) {
    const LieAlgebra d0 = LieAlgebra::quaternion(a, p);
    const ToralSample q = is_toral_sampled(d0, 200, 42);
    CHECK_FALSE(q.not_toral);
    CHECK_FALSE(q.exact);
    CHECK(q.checked == 203);
    // No sampled element (or basis vector) is inertial.
    for (const auto& y : q.samples) CHECK_FALSE(inertial_solve(d0, y));
  }
  const ToralSample ab = is_toral_sampled(LieAlgebra::abelian(2), 10, 1);
  CHECK_FALSE(ab.not_toral);
  CHECK(ab.exact);
  CHECK(is_toral_sampled(LieAlgebra::sl2(), 5, 9).samples == is_toral_sampled(LieAlgebra::sl2(), 5, 9).samples);
}

TEST_CASE("Hilbert symbol: product formula, bilinearity, (a, -a) = 1") {
  std::mt19937_64 rng(5);
  const std::vector<std::uint64_t> places{0, 2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int t = 0; t < 300; ++t) {
    const long a = static_cast<long>(rng() % 200) - 100, b = static_cast<long>(rng() % 200) - 100;
    const long c = static_cast<long>(rng() % 200) - 100;
    if (a == 0 || b == 0 || c == 0) continue;
    // All prime factors of |a|,|b| < 100 are at most 97; include every place.
    int prod = 1;
    for (std::uint64_t v = 0; v < 100; ++v) {
      if (v != 0 && (v < 2 || !mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(v)).get_mpz_t(), 25))) continue;
      prod *= hilbert_symbol(a, b, v);
    }
    CHECK(prod == 1);
    for (std::uint64_t v : places) {
      CHECK(hilbert_symbol(a, Rational(-a), v) == 1);
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
    }
  }
  CHECK(hilbert_symbol(2, 5, 5) == -1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, 3) == 1);
}

TEST_CASE("certify_toral") {
  CHECK(certify_toral(LieAlgebra::abelian(3)).verdict == ToralCertificate::Verdict::Toral);
  CHECK(certify_toral(LieAlgebra::sl2()).verdict == ToralCertificate::Verdict::NotToral);
  for (auto [a, p] : {std::pair{2L, 5L}, std::pair{2L, 3L}}) {
    CHECK(certify_toral(LieAlgebra::quaternion(a, p)).verdict == ToralCertificate::Verdict::Toral);
  }
  // a = 1 is a square: x^2 - 5 y^2 + 5 z^2 has the zero (0, 1, 1).
  CHECK(certify_toral(LieAlgebra::quaternion(1, 5)).verdict == ToralCertificate::Verdict::NotToral);
  CHECK(certify_toral(LieAlgebra::slm(3)).verdict == ToralCertificate::Verdict::Unknown);

  // Over Q_7, 2 = 3^2 is a square and the form splits.
  LieAlgebra q7(3, FieldDescriptor::padic(7, 4));
  const LieAlgebra base = LieAlgebra::quaternion(2, 7);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) q7.set_bracket(i, j, base.structure(i, j));
  CHECK(certify_toral(q7).verdict == ToralCertificate::Verdict::NotToral);
  // sl_2 is split over Q_5 too.
  LieAlgebra s5(3, FieldDescriptor::padic(5, 4));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) s5.set_bracket(i, j, LieAlgebra::sl2().structure(i, j));
  CHECK(certify_toral(s5).verdict == ToralCertificate::Verdict::NotToral);
}

TEST_CASE("trace-zero quaternions from the 4x4 matrices A, B, AB") {
  // A^2 = p I, B^2 = a I, AB = -BA give [A,B] = 2AB, [A,AB] = 2pB, [B,AB] = -2aA.
  const long a = 2, p = 5;
  const QMatrix am = qmat({{0, p, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -p}, {0, 0, -1, 0}});
  const QMatrix bm = qmat({{0, 0, a, 0}, {0, 0, 0, a}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  const LieAlgebra d0 = LieAlgebra::from_matrices({am, bm, am * bm});
  CHECK(d0.structure(0, 1) == vec({0, 0, 2}));
  CHECK(d0.structure(0, 2) == vec({0, 2 * p, 0}));
  CHECK(d0.structure(1, 2) == vec({-2 * a, 0, 0}));
  const Classification c = classify(d0, 200, 7);
  CHECK(c.perfect);
  CHECK(c.radical_dim == 0);
  CHECK_FALSE(c.toral.not_toral);
  CHECK(c.pluperfect == Classification::Pluperfect::CertifiedNo);
}

TEST_CASE("classify") {
  const Classification sl2 = classify(LieAlgebra::sl2(), 50, 1);
  CHECK(sl2.perfect);
  CHECK(sl2.radical_dim == 0);
  CHECK(sl2.toral.not_toral);
  CHECK(sl2.pluperfect == Classification::Pluperfect::CertifiedYes);
  for (const auto& c : sl2.inertial.certificates) CHECK(verify_certificate(LieAlgebra::sl2(), c));

  const Classification d0 = classify(LieAlgebra::quaternion(2, 3), 200, 1);
  CHECK(d0.perfect);
  CHECK_FALSE(d0.toral.not_toral);
  CHECK(d0.inertial.harvested == 0);
  CHECK(d0.pluperfect == Classification::Pluperfect::CertifiedNo);

  const Classification ab = classify(LieAlgebra::abelian(2), 10, 1);
  CHECK_FALSE(ab.perfect);
  CHECK(ab.pluperfect == Classification::Pluperfect::CertifiedNo);
  CHECK(classify(LieAlgebra::solvable2(), 10, 1).pluperfect == Classification::Pluperfect::CertifiedNo);
  CHECK(classify(LieAlgebra::slm(3), 10, 1).pluperfect == Classification::Pluperfect::CertifiedYes);
}
