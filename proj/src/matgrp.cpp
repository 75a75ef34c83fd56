#include "tamelab/matrix.hpp"

namespace tamelab {

ScalarMatrix truncate(const ScalarMatrix& g, int precision) {
  return g.map([precision](const PadicScalar& e) { return e.truncated(precision); });
}

ScalarMatrix lift(const ScalarMatrix& g, int precision) {
  return g.map([precision](const PadicScalar& e) { return e.lifted(precision); });
}

ScalarMatrix divide_by_p_power(const ScalarMatrix& x, int k) {
  return x.map([k](const PadicScalar& e) {
    // Zero entries stay zero at the reduced precision.
    if (e.is_zero()) return PadicScalar::from_residue(e.p(), e.precision() - k, 0);
    return e.divided_by_p_power(k);
  });
}

ScalarMatrix mat_exp(const ScalarMatrix& x) {
  const int n = x.precision();
  const u64 p = x.p();
  const int d = matrix_depth(x);
  if (d < 1) throw AlgebraError(ErrorKind::DepthError, "mat_exp needs X = 0 mod p");
  const detail::SeriesPlan plan = detail::exp_series_plan(p, n, d);
  const int w = n + plan.extra_levels;
  const ScalarMatrix xw = lift(x, w);
  ScalarMatrix power = ScalarMatrix::identity(x.size(), xw.proto());
  ScalarMatrix sum = ScalarMatrix::identity(x.size(), x.proto());
  PadicScalar unit_fact = x.proto().one_like();
  for (int i = 1; i <= plan.last_term; ++i) {
    power = power * xw;
    const int vi = valuation_of(p, static_cast<u64>(i));
    unit_fact = unit_fact * unit_fact.from_int_like(static_cast<i64>(static_cast<u64>(i) / checked_pow(p, vi)));
    const int vf = detail::factorial_valuation(p, static_cast<u64>(i));
    sum = sum + unit_fact.inverse() * truncate(divide_by_p_power(power, vf), n);
  }
  return sum;
}

ScalarMatrix mat_log(const ScalarMatrix& g) {
  const int n = g.precision();
  const u64 p = g.p();
  const ScalarMatrix a = g - ScalarMatrix::identity(g.size(), g.proto());
  const int d = matrix_depth(a);
  if (d < 1) throw AlgebraError(ErrorKind::DepthError, "mat_log needs g = I mod p");
  const detail::SeriesPlan plan = detail::log_series_plan(p, n, d);
  const int w = n + plan.extra_levels;
  const ScalarMatrix aw = lift(a, w);
  ScalarMatrix power = ScalarMatrix::identity(g.size(), aw.proto());
  ScalarMatrix sum(g.size(), g.proto());
  for (int i = 1; i <= plan.last_term; ++i) {
    power = power * aw;
    const int vi = valuation_of(p, static_cast<u64>(i));
    const PadicScalar unit_inv = g.proto().from_int_like(static_cast<i64>(static_cast<u64>(i) / checked_pow(p, vi))).inverse();
    const ScalarMatrix term = unit_inv * truncate(divide_by_p_power(power, vi), n);
    sum = (i % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

ScalarMatrix scaled_elementary(std::size_t m, std::size_t i, std::size_t j, u64 p, int precision) {
  const PadicScalar proto(p, precision, 0);
  ScalarMatrix e(m, proto);
  e(i, j) = proto.from_int_like(static_cast<i64>(p));
  return e;
}

ScalarMatrix scaled_diagonal_generator(std::size_t m, std::size_t i, u64 p, int precision) {
  const PadicScalar proto(p, precision, 0);
  const PadicScalar pp = proto.from_int_like(static_cast<i64>(p));
  ScalarMatrix e(m, proto);
  e(i, i) = pp;
  e(i + 1, i + 1) = -pp;
  e(i, i + 1) = pp;
  e(i + 1, i) = -pp;
  return e;
}

std::vector<ScalarMatrix> sl_congruence_generators(std::size_t m, u64 p, int precision) {
  if (m < 2) throw AlgebraError(ErrorKind::DomainError, "sl_congruence_generators needs m >= 2");
  std::vector<ScalarMatrix> gens;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) gens.push_back(mat_exp(scaled_elementary(m, i, j, p, precision)));
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) gens.push_back(mat_exp(scaled_diagonal_generator(m, i, p, precision)));
  return gens;
}

}  // namespace tamelab
