#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tamelab/error.hpp"

namespace tamelab {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Dense rational matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QVector apply(const QVector& v) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

namespace linalg {

/// Reduced row echelon form in place; returns pivot columns. Pivots are the
/// first nonzero entry in each column (deterministic).
std::vector<std::size_t> rref(QMatrix& a);
std::size_t rank(QMatrix a);
/// Basis of {x : A x = 0}, one vector per free column.
std::vector<QVector> nullspace(const QMatrix& a);
/// A solution of A x = b with free variables set to zero, or none.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
/// Rows spanning the same space, echelon-reduced.
std::vector<QVector> row_basis(const std::vector<QVector>& rows, std::size_t dim);
bool is_zero(const QVector& v);
/// Scales v to a primitive integer vector with positive first nonzero entry;
/// returns the factor used.
Rational make_primitive(QVector& v);

}  // namespace linalg

/// Polynomials over Q, coefficient i belongs to t^i; no trailing zeros.
using QPoly = std::vector<Rational>;
QPoly poly_gcd(QPoly a, QPoly b);
QPoly poly_derivative(const QPoly& a);
/// Rational roots (distinct, ascending). Gives up on coefficients whose
/// divisor enumeration would be too large and returns what it found.
std::vector<Rational> rational_roots(const QPoly& a);
/// Minimal polynomial (monic) by the first linear dependency among I, A, A^2, ...
QPoly minimal_polynomial(const QMatrix& a);

struct FieldDescriptor {
  enum class Kind { Rational, PAdic };
  Kind kind = Kind::Rational;
  std::uint64_t p = 0;
  int precision = 0;

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor padic(std::uint64_t p, int prec) { return {Kind::PAdic, p, prec}; }
  std::string to_string() const;
  bool operator==(const FieldDescriptor&) const = default;
};

/// Structure constants c_ijk with [e_i, e_j] = sum_k c_ijk e_k. Computation is
/// always exact over Q; a p-adic descriptor only changes the caveats reported
/// and the local place used by the exact toral certificate.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim, FieldDescriptor field = {});

  std::size_t dim() const noexcept { return dim_; }
  const FieldDescriptor& field() const noexcept { return field_; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const QVector& v);
  /// Sets only [e_i, e_j], so malformed tables can be represented and validated.
  void set_raw(std::size_t i, std::size_t j, const QVector& v);
  const QVector& structure(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }

  QVector bracket(const QVector& x, const QVector& y) const;
  /// Matrix of y -> [x, y] in the basis.
  QMatrix ad(const QVector& x) const;
  QVector basis_vector(std::size_t i) const;
  bool is_abelian() const;

  static LieAlgebra abelian(std::size_t dim);
  /// Basis (h, e, f).
  static LieAlgebra sl2();
  /// Basis H_1..H_{m-1} (H_i = E_ii - E_{i+1,i+1}) then E_ij, i != j, row-major.
  static LieAlgebra slm(std::size_t m);
  /// [x,y] = p z, [x,z] = p a y, [y,z] = p^2 x.
  static LieAlgebra quaternion(std::int64_t a, std::int64_t p);
  /// [x, y] = y.
  static LieAlgebra solvable2();
  /// Structure constants of the span of linearly independent matrices closed
  /// under the commutator.
  static LieAlgebra from_matrices(const std::vector<QMatrix>& basis);

 private:
  std::size_t dim_;
  FieldDescriptor field_;
  std::vector<QVector> c_;
};

struct ValidationReport {
  enum class Violation { None, Antisymmetry, Jacobi };
  Violation violation = Violation::None;
  std::size_t i = 0, j = 0, k = 0;

  bool ok() const noexcept { return violation == Violation::None; }
  std::string to_string() const;
};

ValidationReport validate(const LieAlgebra& l);
/// Throws DomainError carrying the violating triple.
void require_valid(const LieAlgebra& l);

/// Echelon basis of [L, L].
std::vector<QVector> derived_subalgebra(const LieAlgebra& l);
bool is_perfect(const LieAlgebra& l);

QMatrix killing_form(const LieAlgebra& l);
Rational killing(const LieAlgebra& l, const QVector& x, const QVector& y);
/// {x : kappa(x, [L, L]) = 0}.
std::vector<QVector> radical(const LieAlgebra& l);

bool ad_semisimple(const LieAlgebra& l, const QVector& x);

struct InertialLieCertificate {
  QVector y;
  QVector x;
  Rational lambda;
};

/// Checks [x, y] = lambda y, lambda != 0, y != 0.
bool verify_certificate(const LieAlgebra& l, const InertialLieCertificate& c);

/// Solves ad_y(x) = -y (so [x, y] = y) with free variables at zero, then
/// rescales x to a primitive integer vector; lambda is the scale factor.
std::optional<InertialLieCertificate> inertial_solve(const LieAlgebra& l, const QVector& y);

struct InertialSpan {
  bool certified = false;
  /// Certificates whose y's are linearly independent; spanning when certified.
  std::vector<InertialLieCertificate> certificates;
  std::size_t harvested = 0;
  std::size_t rank = 0;
  std::uint64_t seed = 0;
};

InertialSpan inertial_span(const LieAlgebra& l, int extra_samples, std::uint64_t seed);

struct ToralSample {
  bool not_toral = false;
  std::optional<QVector> witness;
  std::size_t checked = 0;
  std::uint64_t seed = 0;
  /// Every ad is zero, so toral holds exactly.
  bool exact = false;
  /// The vectors that were tested, basis first.
  std::vector<QVector> samples;
};

/// Deterministic random vector with integer entries in [-3, 3].
std::vector<QVector> sample_vectors(std::size_t dim, int count, std::uint64_t seed);

ToralSample is_toral_sampled(const LieAlgebra& l, int trials, std::uint64_t seed);

/// Hilbert symbol (a, b)_v for nonzero rationals; v = 0 means the real place.
int hilbert_symbol(const Rational& a, const Rational& b, std::uint64_t v);

struct ToralCertificate {
  enum class Verdict { Toral, NotToral, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::string method;
  /// The Killing form diagonal, when the quadratic-form route applies.
  QVector diagonal;
  /// Place at which the form is anisotropic (0 = real), when toral.
  std::optional<std::uint64_t> place;
};

/// Exact toral decision where available: abelian algebras, and simple
/// 3-dimensional algebras, which are toral exactly when their Killing form
/// is anisotropic over the base field.
ToralCertificate certify_toral(const LieAlgebra& l);

struct Classification {
  bool perfect = false;
  std::size_t radical_dim = 0;
  ToralSample toral;
  ToralCertificate toral_certificate;
  InertialSpan inertial;
  enum class Pluperfect { CertifiedYes, CertifiedNo, Inconclusive };
  Pluperfect pluperfect = Pluperfect::Inconclusive;
  std::string pluperfect_reason;
  std::string caveat;
};

std::string_view to_string(Classification::Pluperfect v);
std::string_view to_string(ToralCertificate::Verdict v);

Classification classify(const LieAlgebra& l, int trials, std::uint64_t seed);

std::string format_vector(const QVector& v);

}  // namespace tamelab
