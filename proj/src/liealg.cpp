#include "tamelab/lie.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace tamelab {

namespace {

QVector zeros(std::size_t n) { return QVector(n, Rational(0)); }

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

QVector QMatrix::apply(const QVector& v) const {
  QVector r = zeros(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  }
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

namespace linalg {

std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix a) { return rref(a).size(); }

std::vector<QVector> nullspace(const QMatrix& a) {
  QMatrix r = a;
  const auto pivots = rref(r);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<QVector> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v = zeros(a.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVector x = zeros(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

std::vector<QVector> row_basis(const std::vector<QVector>& rows, std::size_t dim) {
  QMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  }
  const auto pivots = rref(m);
  std::vector<QVector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    QVector v(dim);
    for (std::size_t j = 0; j < dim; ++j) v[j] = m(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

Rational make_primitive(QVector& v) {
  mpz_class den = 1, num = 0;
  for (const auto& r : v) {
    if (r == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  for (const auto& r : v) {
    if (r == 0) continue;
    const mpz_class scaled = r.get_num() * (den / r.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num == 0) return Rational(1);
  Rational factor(den, num);
  factor.canonicalize();
  const auto first = std::find_if(v.begin(), v.end(), [](const Rational& r) { return r != 0; });
  if (*first < 0) factor = -factor;
  for (auto& r : v) r *= factor;
  return factor;
}

}  // namespace linalg

namespace {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a by b (b nonzero).
QPoly poly_mod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Rational poly_eval(const QPoly& a, const Rational& t) {
  Rational r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * t + *it;
  return r;
}

/// Positive divisors of |n| when n fits the trial-division budget.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > mpz_class("1000000000000")) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [q, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

QPoly poly_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly poly_derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::vector<Rational> rational_roots(const QPoly& poly) {
  QPoly a = poly;
  trim(a);
  std::vector<Rational> roots;
  if (a.size() <= 1) return roots;
  if (a[0] == 0) {
    roots.push_back(0);
    std::size_t k = 0;
    while (a[k] == 0) ++k;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
  }
  if (a.size() > 1) {
    mpz_class den = 1;
    for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const mpz_class c0 = Rational(a.front() * den).get_num();
    const mpz_class cn = Rational(a.back() * den).get_num();
    const auto nums = divisors(c0), dens = divisors(cn);
    if (nums && dens) {
      for (const auto& r : *nums) {
        for (const auto& s : *dens) {
          for (int sign : {1, -1}) {
            Rational cand(r * sign, s);
            cand.canonicalize();
            if (poly_eval(a, cand) == 0 &&
                std::find(roots.begin(), roots.end(), cand) == roots.end()) {
              roots.push_back(cand);
            }
          }
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

QPoly minimal_polynomial(const QMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<QVector> powers;
  QMatrix pw = QMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    QVector flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = pw(i, j);
    }
    powers.push_back(std::move(flat));
    QMatrix cols(n * n, powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c) {
      for (std::size_t r = 0; r < n * n; ++r) cols(r, c) = powers[c][r];
    }
    const auto ns = linalg::nullspace(cols);
    if (!ns.empty()) {
      // Earlier powers are independent, so the relation involves A^k.
      QPoly mu = ns.front();
      const Rational lead = mu.back();
      for (auto& c : mu) c /= lead;
      return mu;
    }
    pw = pw * a;
  }
  throw AlgebraError(ErrorKind::DomainError, "minimal polynomial: no relation found");
}

std::string FieldDescriptor::to_string() const {
  if (kind == Kind::Rational) return "Q";
  return "Q_" + std::to_string(p) + " (precision " + std::to_string(precision) + ")";
}

LieAlgebra::LieAlgebra(std::size_t dim, FieldDescriptor field)
    : dim_(dim), field_(field), c_(dim * dim, zeros(dim)) {
  if (field.kind == FieldDescriptor::Kind::PAdic && (field.p < 2 || field.precision < 1)) {
    throw AlgebraError(ErrorKind::DomainError, "p-adic field needs p >= 2 and precision >= 1");
  }
}

void LieAlgebra::set_raw(std::size_t i, std::size_t j, const QVector& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_) {
    throw AlgebraError(ErrorKind::DomainError, "bracket index or length out of range");
  }
  c_[i * dim_ + j] = v;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const QVector& v) {
  set_raw(i, j, v);
  QVector neg = v;
  for (auto& r : neg) r = -r;
  set_raw(j, i, neg);
}

QVector LieAlgebra::bracket(const QVector& x, const QVector& y) const {
  QVector out = zeros(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational f = x[i] * y[j];
      const QVector& c = structure(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c[k] != 0) out[k] += f * c[k];
      }
    }
  }
  return out;
}

QMatrix LieAlgebra::ad(const QVector& x) const {
  QMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const QVector col = bracket(x, basis_vector(j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

QVector LieAlgebra::basis_vector(std::size_t i) const {
  QVector v = zeros(dim_);
  v[i] = 1;
  return v;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const QVector& v) { return linalg::is_zero(v); });
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra LieAlgebra::sl2() {
  LieAlgebra l(3);
  l.set_bracket(0, 1, {0, 2, 0});
  l.set_bracket(0, 2, {0, 0, -2});
  l.set_bracket(1, 2, {1, 0, 0});
  return l;
}

LieAlgebra LieAlgebra::slm(std::size_t m) {
  if (m < 2) throw AlgebraError(ErrorKind::DomainError, "sl_m needs m >= 2");
  std::vector<QMatrix> basis;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    QMatrix h(m, m);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(h);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      QMatrix e(m, m);
      e(i, j) = 1;
      basis.push_back(e);
    }
  }
  return from_matrices(basis);
}

LieAlgebra LieAlgebra::quaternion(std::int64_t a, std::int64_t p) {
  LieAlgebra l(3);
  const Rational pa(p), aa(a);
  l.set_bracket(0, 1, {0, 0, pa});
  l.set_bracket(0, 2, {0, pa * aa, 0});
  l.set_bracket(1, 2, {pa * pa, 0, 0});
  return l;
}

LieAlgebra LieAlgebra::solvable2() {
  LieAlgebra l(2);
  l.set_bracket(0, 1, {0, 1});
  return l;
}

LieAlgebra LieAlgebra::from_matrices(const std::vector<QMatrix>& basis) {
  const std::size_t d = basis.size();
  if (d == 0) return LieAlgebra(0);
  const std::size_t n = basis[0].rows();
  QMatrix coords(n * n, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t r = 0; r < n * n; ++r) coords(r, k) = basis[k](r / n, r % n);
  }
  if (linalg::rank(coords) != d) throw AlgebraError(ErrorKind::DomainError, "matrix basis is dependent");
  LieAlgebra l(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const QMatrix c = basis[i] * basis[j] - basis[j] * basis[i];
      QVector flat(n * n);
      for (std::size_t r = 0; r < n * n; ++r) flat[r] = c(r / n, r % n);
      const auto sol = linalg::solve(coords, flat);
      if (!sol) throw AlgebraError(ErrorKind::DomainError, "matrix span is not closed under the bracket");
      l.set_bracket(i, j, *sol);
    }
  }
  return l;
}

std::string ValidationReport::to_string() const {
  switch (violation) {
    case Violation::None:
      return "ok";
    case Violation::Antisymmetry:
      return "antisymmetry fails at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    case Violation::Jacobi:
      return "Jacobi fails at (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
  }
  return "?";
}

ValidationReport validate(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  ValidationReport rep;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (l.structure(i, j)[k] != -l.structure(j, i)[k]) {
          rep.violation = ValidationReport::Violation::Antisymmetry;
          rep.i = i;
          rep.j = j;
          return rep;
        }
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        const QVector ei = l.basis_vector(i), ej = l.basis_vector(j), ek = l.basis_vector(k);
        QVector sum = l.bracket(ei, l.bracket(ej, ek));
        const QVector b = l.bracket(ej, l.bracket(ek, ei));
        const QVector c = l.bracket(ek, l.bracket(ei, ej));
        for (std::size_t t = 0; t < d; ++t) sum[t] += b[t] + c[t];
        if (!linalg::is_zero(sum)) {
          rep.violation = ValidationReport::Violation::Jacobi;
          rep.i = i;
          rep.j = j;
          rep.k = k;
          return rep;
        }
      }
    }
  }
  return rep;
}

void require_valid(const LieAlgebra& l) {
  const ValidationReport r = validate(l);
  if (!r.ok()) throw AlgebraError(ErrorKind::DomainError, "invalid Lie algebra: " + r.to_string());
}

std::vector<QVector> derived_subalgebra(const LieAlgebra& l) {
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) rows.push_back(l.structure(i, j));
  }
  if (rows.empty()) return {};
  return linalg::row_basis(rows, l.dim());
}

bool is_perfect(const LieAlgebra& l) { return derived_subalgebra(l).size() == l.dim(); }

Rational killing(const LieAlgebra& l, const QVector& x, const QVector& y) {
  const QMatrix m = l.ad(x) * l.ad(y);
  Rational t = 0;
  for (std::size_t i = 0; i < l.dim(); ++i) t += m(i, i);
  return t;
}

QMatrix killing_form(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  std::vector<QMatrix> ads;
  for (std::size_t i = 0; i < d; ++i) ads.push_back(l.ad(l.basis_vector(i)));
  QMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const QMatrix m = ads[i] * ads[j];
      Rational t = 0;
      for (std::size_t s = 0; s < d; ++s) t += m(s, s);
      k(i, j) = t;
      k(j, i) = t;
    }
  }
  return k;
}

std::vector<QVector> radical(const LieAlgebra& l) {
  const std::size_t d = l.dim();
  const auto derived = derived_subalgebra(l);
  if (derived.empty()) {
    std::vector<QVector> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(l.basis_vector(i));
    return all;
  }
  const QMatrix k = killing_form(l);
  // Rows: v^T K for each v spanning [L, L]; the radical is their common kernel.
  QMatrix m(derived.size(), d);
  for (std::size_t r = 0; r < derived.size(); ++r) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < d; ++i) s += derived[r][i] * k(i, j);
      m(r, j) = s;
    }
  }
  return linalg::nullspace(m);
}

bool ad_semisimple(const LieAlgebra& l, const QVector& x) {
  const QPoly mu = minimal_polynomial(l.ad(x));
  return poly_gcd(mu, poly_derivative(mu)).size() <= 1;
}

bool verify_certificate(const LieAlgebra& l, const InertialLieCertificate& c) {
  if (c.y.size() != l.dim() || c.x.size() != l.dim()) return false;
  if (c.lambda == 0 || linalg::is_zero(c.y)) return false;
  QVector rhs = c.y;
  for (auto& r : rhs) r *= c.lambda;
  return l.bracket(c.x, c.y) == rhs;
}

std::optional<InertialLieCertificate> inertial_solve(const LieAlgebra& l, const QVector& y) {
  if (y.size() != l.dim()) throw AlgebraError(ErrorKind::DomainError, "vector length differs from dim");
  if (linalg::is_zero(y)) throw AlgebraError(ErrorKind::ZeroVector, "inertial_solve needs y != 0");
  QVector rhs = y;
  for (auto& r : rhs) r = -r;
  auto x = linalg::solve(l.ad(y), rhs);
  if (!x) return std::nullopt;
  InertialLieCertificate c{y, *x, Rational(1)};
  c.lambda = linalg::make_primitive(c.x);
  return c;
}

std::vector<QVector> sample_vectors(std::size_t dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<QVector> out;
  for (int t = 0; t < count; ++t) {
    QVector v(dim);
    for (auto& r : v) r = static_cast<long>(rng() % 7) - 3;
    if (dim > 0 && linalg::is_zero(v)) v[0] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

InertialSpan inertial_span(const LieAlgebra& l, int extra_samples, std::uint64_t seed) {
  const std::size_t d = l.dim();
  InertialSpan out;
  out.seed = seed;
  std::vector<QVector> span;  // echelon rows of the accepted y's
  auto accept = [&](InertialLieCertificate c) {
    ++out.harvested;
    std::vector<QVector> trial = span;
    trial.push_back(c.y);
    trial = linalg::row_basis(trial, d);
    if (trial.size() == span.size()) return;
    span = std::move(trial);
    out.certificates.push_back(std::move(c));
  };
  auto done = [&] { return span.size() == d; };

  std::vector<QVector> candidates;
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(l.basis_vector(i));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      QVector v = l.basis_vector(i);
      v[j] = 1;
      candidates.push_back(std::move(v));
    }
  }
  for (auto& v : sample_vectors(d, extra_samples, seed)) candidates.push_back(std::move(v));

  // (a) y in image(ad_y).
  for (const auto& y : candidates) {
    if (done() || d == 0) break;
    if (auto c = inertial_solve(l, y)) accept(std::move(*c));
  }
  // (b) eigenvectors with nonzero rational eigenvalues of ad_x.
  for (const auto& x : candidates) {
    if (done() || d == 0) break;
    const QMatrix adx = l.ad(x);
    for (const Rational& lambda : rational_roots(minimal_polynomial(adx))) {
      if (lambda == 0) continue;
      QMatrix shifted = adx;
      for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lambda;
      for (QVector y : linalg::nullspace(shifted)) {
        linalg::make_primitive(y);
        QVector xx = x;
        accept({std::move(y), std::move(xx), lambda});
        if (done()) break;
      }
      if (done()) break;
    }
  }
  out.rank = span.size();
  out.certified = d > 0 && done();
  return out;
}

ToralSample is_toral_sampled(const LieAlgebra& l, int trials, std::uint64_t seed) {
  ToralSample out;
  out.seed = seed;
  out.exact = l.is_abelian();
  for (std::size_t i = 0; i < l.dim(); ++i) out.samples.push_back(l.basis_vector(i));
  for (auto& v : sample_vectors(l.dim(), trials, seed)) out.samples.push_back(std::move(v));
  for (const auto& x : out.samples) {
    ++out.checked;
    if (!ad_semisimple(l, x)) {
      out.not_toral = true;
      out.witness = x;
      out.exact = false;
      return out;
    }
  }
  return out;
}

namespace {

/// v_q(r) and the q-free part of a nonzero rational.
std::pair<int, Rational> split_prime(const Rational& r, const mpz_class& q) {
  mpz_class num = r.get_num(), den = r.get_den();
  int v = 0;
  while (num % q == 0) {
    num /= q;
    ++v;
  }
  while (den % q == 0) {
    den /= q;
    --v;
  }
  Rational u(num, den);
  u.canonicalize();
  return {v, u};
}

int legendre_unit(const Rational& u, const mpz_class& q) {
  mpz_class n = u.get_num() % q, d = u.get_den() % q;
  if (n < 0) n += q;
  if (d < 0) d += q;
  return mpz_legendre(n.get_mpz_t(), q.get_mpz_t()) * mpz_legendre(d.get_mpz_t(), q.get_mpz_t());
}

/// Residue mod 8 of a 2-adic unit n/d (d^2 = 1 mod 8).
long mod8(const Rational& u) {
  mpz_class r = (u.get_num() * u.get_den()) % 8;
  if (r < 0) r += 8;
  return r.get_si();
}

/// Odd primes and 2 dividing the numerators or denominators, when fully factorable.
std::optional<std::vector<std::uint64_t>> bad_primes(const QVector& values) {
  std::vector<std::uint64_t> primes{2};
  for (const auto& r : values) {
    for (mpz_class n : {mpz_class(abs(r.get_num())), mpz_class(r.get_den())}) {
      for (std::uint64_t q = 2; q <= 1'000'000 && n > 1; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
      }
      if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0 || !n.fits_ulong_p()) return std::nullopt;
        const std::uint64_t q = n.get_ui();
        if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
      }
    }
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

/// Diagonalizes a nondegenerate symmetric form; empty if degenerate.
QVector diagonalize(const QMatrix& k) {
  const std::size_t d = k.rows();
  auto form = [&](const QVector& a, const QVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) s += a[i] * k(i, j) * b[j];
    }
    return s;
  };
  std::vector<QVector> pool;
  for (std::size_t i = 0; i < d; ++i) {
    QVector v = zeros(d);
    v[i] = 1;
    pool.push_back(v);
  }
  QVector diag;
  while (!pool.empty()) {
    std::optional<QVector> pick;
    for (std::size_t i = 0; i < pool.size() && !pick; ++i) {
      if (form(pool[i], pool[i]) != 0) {
        pick = pool[i];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (std::size_t i = 0; i < pool.size() && !pick; ++i) {
      for (std::size_t j = i + 1; j < pool.size() && !pick; ++j) {
        QVector s = pool[i];
        for (std::size_t t = 0; t < d; ++t) s[t] += pool[j][t];
        if (form(s, s) != 0) {
          pick = s;
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        }
      }
    }
    if (!pick) return {};
    const Rational kv = form(*pick, *pick);
    diag.push_back(kv);
    for (auto& w : pool) {
      const Rational f = form(w, *pick) / kv;
      for (std::size_t t = 0; t < d; ++t) w[t] -= f * (*pick)[t];
    }
  }
  return diag;
}

/// Ternary form <a1, a2, a3> is isotropic at v iff (-a1 a3, -a2 a3)_v = 1.
bool ternary_isotropic(const QVector& a, std::uint64_t v) {
  return hilbert_symbol(-a[0] * a[2], -a[1] * a[2], v) == 1;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, std::uint64_t v) {
  if (a == 0 || b == 0) throw AlgebraError(ErrorKind::DomainError, "Hilbert symbol of zero");
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;
  const mpz_class q(static_cast<unsigned long>(v));
  const auto [alpha, u] = split_prime(a, q);
  const auto [beta, w] = split_prime(b, q);
  if (v == 2) {
    const long u8 = mod8(u), w8 = mod8(w);
    const long eu = ((u8 - 1) / 2) % 2, ew = ((w8 - 1) / 2) % 2;
    const long ou = ((u8 * u8 - 1) / 8) % 2, ow = ((w8 * w8 - 1) / 8) % 2;
    const long e = eu * ew + alpha * ow + beta * ou;
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  if ((static_cast<long>(alpha) * beta % 2 != 0) && ((v - 1) / 2) % 2 != 0) s = -s;
  if (beta % 2 != 0) s *= legendre_unit(u, q);
  if (alpha % 2 != 0) s *= legendre_unit(w, q);
  return s;
}

ToralCertificate certify_toral(const LieAlgebra& l) {
  ToralCertificate out;
  if (l.is_abelian()) {
    out.verdict = ToralCertificate::Verdict::Toral;
    out.method = "every ad_x is zero";
    return out;
  }
  if (l.dim() != 3 || !is_perfect(l)) {
    out.method = "no exact route for this algebra";
    return out;
  }
  out.diagonal = diagonalize(killing_form(l));
  if (out.diagonal.size() != 3) {
    out.method = "degenerate Killing form";
    return out;
  }
  const FieldDescriptor& f = l.field();
  if (f.kind == FieldDescriptor::Kind::PAdic) {
    if (ternary_isotropic(out.diagonal, f.p)) {
      out.verdict = ToralCertificate::Verdict::NotToral;
      out.method = "Killing form isotropic over Q_" + std::to_string(f.p) + ": split, has nilpotents";
    } else {
      out.verdict = ToralCertificate::Verdict::Toral;
      out.place = f.p;
      out.method = "Killing form anisotropic over Q_" + std::to_string(f.p);
    }
    return out;
  }
  if (!ternary_isotropic(out.diagonal, 0)) {
    out.verdict = ToralCertificate::Verdict::Toral;
    out.place = 0;
    out.method = "Killing form definite over R, hence anisotropic over Q";
    return out;
  }
  const auto primes = bad_primes(out.diagonal);
  if (!primes) {
    out.method = "could not factor the Killing form coefficients";
    return out;
  }
  for (std::uint64_t q : *primes) {
    if (!ternary_isotropic(out.diagonal, q)) {
      out.verdict = ToralCertificate::Verdict::Toral;
      out.place = q;
      out.method = "Killing form anisotropic over Q_" + std::to_string(q) + ", hence over Q";
      return out;
    }
  }
  out.verdict = ToralCertificate::Verdict::NotToral;
  out.method = "Killing form isotropic at every place (Hasse-Minkowski): split, has nilpotents";
  return out;
}

std::string_view to_string(Classification::Pluperfect v) {
  switch (v) {
    case Classification::Pluperfect::CertifiedYes:
      return "certified-yes";
    case Classification::Pluperfect::CertifiedNo:
      return "certified-no";
    case Classification::Pluperfect::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string_view to_string(ToralCertificate::Verdict v) {
  switch (v) {
    case ToralCertificate::Verdict::Toral:
      return "toral";
    case ToralCertificate::Verdict::NotToral:
      return "not-toral";
    case ToralCertificate::Verdict::Unknown:
      return "unknown";
  }
  return "?";
}

Classification classify(const LieAlgebra& l, int trials, std::uint64_t seed) {
  require_valid(l);
  Classification c;
  c.perfect = is_perfect(l);
  c.radical_dim = radical(l).size();
  c.toral = is_toral_sampled(l, trials, seed);
  c.toral_certificate = certify_toral(l);
  c.inertial = inertial_span(l, trials, seed);
  using P = Classification::Pluperfect;
  if (l.dim() == 0) {
    c.pluperfect = P::CertifiedYes;
    c.pluperfect_reason = "zero algebra";
  } else if (!c.perfect) {
    c.pluperfect = P::CertifiedNo;
    c.pluperfect_reason = "not perfect: L/[L,L] is a nontrivial abelian (toral) quotient";
  } else if (c.inertial.certified) {
    c.pluperfect = P::CertifiedYes;
    c.pluperfect_reason = "inertial certificates span L";
  } else if (c.toral_certificate.verdict == ToralCertificate::Verdict::Toral) {
    c.pluperfect = P::CertifiedNo;
    c.pluperfect_reason = "L is itself a nontrivial toral quotient (" + c.toral_certificate.method + ")";
  } else {
    c.pluperfect = P::Inconclusive;
    c.pluperfect_reason = "inertial harvest did not span and no toral quotient was certified";
  }
  if (l.field().kind == FieldDescriptor::Kind::PAdic) {
    c.caveat = "structure constants are exact rationals; sampled and eigenvalue searches use Q-points only";
  }
  return c;
}

std::string format_vector(const QVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

}  // namespace tamelab
