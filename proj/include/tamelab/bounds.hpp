#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "tamelab/error.hpp"

namespace tamelab {

/// Closed real interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrecision = 128;

  Interval();
  explicit Interval(long v);
  /// Tightest enclosure of a decimal string (e.g. "1e80", "12.5").
  static Interval from_decimal(const std::string& s);
  static Interval pi();
  static Interval euler_gamma();

  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  /// Both operands must be nonnegative.
  friend Interval operator*(const Interval& a, const Interval& b);
  /// a >= 0, b > 0.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval log() const;
  Interval sqrt() const;

  bool certainly_greater(const Interval& o) const;  // lo > o.hi
  bool certainly_not_greater(const Interval& o) const;  // hi <= o.lo
  double lo_double() const;
  double hi_double() const;
  /// Endpoints rounded outward to `digits` significant digits.
  std::string lo_string(int digits = 30) const;
  std::string hi_string(int digits = 30) const;
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t lo_, hi_;
};

enum class Verdict { True, False, Indeterminate };
std::string_view to_string(Verdict v);

struct SplittingBoundInput {
  std::string abs_discriminant = "1";  // exact integer or decimal
  long r1 = 1;
  long r2 = 0;
  std::vector<long> prime_norms;
  bool grh = false;
};

struct SplittingBoundResult {
  Interval alpha_finite;
  Interval alpha_infinite;
  Interval threshold;  // log sqrt|d_K|
  Verdict verdict = Verdict::Indeterminate;
};

/// alpha_T (or its GRH form) plus the archimedean constants against log sqrt|d_K|,
/// decided with interval arithmetic so only certified inequalities give True/False.
SplittingBoundResult splitting_bound(const SplittingBoundInput& in);

/// Per-place archimedean constants.
Interval real_place_constant(bool grh);
Interval complex_place_constant(bool grh);

/// r1 + r2 - 1 + dim Cl_K[p].
long selmer_dim(long r1, long r2, long clp);

/// e + z0 ramified primes to realise a quotient of order p^e.
long ramification_budget(long order_exponent, long z0);

struct GSResult {
  bool negative = false;
  std::optional<mpq_class> witness_t;
  std::optional<mpq_class> witness_value;
  mpq_class min_t;
  mpq_class min_value;
};

/// f(t) = 1 - d t + sum_i t^(e_i) at t = i / grid_points, 0 < i < grid_points,
/// exactly. A negative grid value is a proof of negativity; the converse is
/// only grid-relative.
GSResult gs_negative(long d, const std::vector<long>& degrees, long grid_points);
mpq_class gs_polynomial(long d, const std::vector<long>& degrees, const mpq_class& t);

}  // namespace tamelab
