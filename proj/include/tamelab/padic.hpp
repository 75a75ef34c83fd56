#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tamelab/error.hpp"

namespace tamelab {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_odd_prime(u64 n);

/// p^n, throwing PrecisionOverflow when the result would not leave headroom
/// for 128-bit products (moduli are kept below 2^62).
u64 checked_pow(u64 p, int n);

/// v_p(n) for n != 0.
int valuation_of(u64 p, u64 n);

namespace detail {

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 e, u64 m);
/// Inverse of a unit modulo m (gcd(a, m) = 1).
u64 invmod(u64 a, u64 m);
/// Reduces a signed integer into [0, m).
u64 reduce_signed(i64 v, u64 m);

/// Terms needed by the truncated exp/log series for an argument of valuation
/// `arg_val` at target precision `prec`, together with the number of extra
/// p-levels the division by i (log) or i! (exp) consumes.
struct SeriesPlan {
  int last_term = 0;
  int extra_levels = 0;
};
SeriesPlan log_series_plan(u64 p, int prec, int arg_val);
SeriesPlan exp_series_plan(u64 p, int prec, int arg_val);

/// v_p(i!) via Legendre: (i - s_p(i)) / (p - 1).
int factorial_valuation(u64 p, u64 i);

}  // namespace detail

/// A residue class modulo p^N with its prime and precision carried along.
/// Values are immutable; mixing precisions throws PrecisionMismatch.
class PadicScalar {
 public:
  PadicScalar(u64 p, int precision, i64 value);

  static PadicScalar from_residue(u64 p, int precision, u64 residue);

  u64 p() const noexcept { return p_; }
  int precision() const noexcept { return prec_; }
  u64 modulus() const noexcept { return mod_; }
  u64 value() const noexcept { return value_; }

  /// Valuation, capped at the precision for zero.
  int valuation() const;
  /// Ring-concept alias: for Z_p the maximal ideal is (p).
  int depth() const { return valuation(); }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ % p_ != 0; }

  PadicScalar inverse() const;

  /// Reduction to a lower precision.
  PadicScalar truncated(int precision) const;
  /// Canonical representative read at a higher precision.
  PadicScalar lifted(int precision) const;
  /// Same precision, arbitrary target precision (truncate or lift).
  PadicScalar at_precision(int precision) const;

  PadicScalar zero_like() const { return PadicScalar(p_, prec_, mod_, 0); }
  PadicScalar one_like() const { return PadicScalar(p_, prec_, mod_, 1 % mod_); }
  PadicScalar from_int_like(i64 v) const { return PadicScalar(p_, prec_, mod_, detail::reduce_signed(v, mod_)); }

  /// Exact division by p^k; requires valuation >= k. Result has precision N - k.
  PadicScalar divided_by_p_power(int k) const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend bool operator==(const PadicScalar& a, const PadicScalar& b) {
    return a.p_ == b.p_ && a.prec_ == b.prec_ && a.value_ == b.value_;
  }

  void append_key(std::string& out) const;
  std::string to_string() const;

 private:
  PadicScalar(u64 p, int precision, u64 mod, u64 value)
      : p_(p), prec_(precision), mod_(mod), value_(value) {}
  void require_same(const PadicScalar& other) const;

  u64 p_;
  int prec_;
  u64 mod_;
  u64 value_;
};

/// x^e for an integer exponent (negative exponents need a unit).
PadicScalar pow(const PadicScalar& x, i64 e);

/// Square root by Hensel lifting. The root is lifted from the least residue
/// r0 in [1, p) with r0^2 = u mod p; for u = 1 mod p this is the root = 1 mod p.
PadicScalar hensel_sqrt(const PadicScalar& u);

/// p-adic logarithm on 1 + pZ_p.
PadicScalar plog(const PadicScalar& u);
/// p-adic exponential on pZ_p.
PadicScalar pexp(const PadicScalar& x);

/// alpha = log(1 + b p^k) / log(1 + a p^k), returned at the precision of a.
/// (1 + a p^k)^alpha = 1 + b p^k holds modulo p^(N + k).
PadicScalar alpha_ratio(const PadicScalar& a, const PadicScalar& b, int k);

// ---------------------------------------------------------------------------
// Truncated power series A / m^M, A = Z_p[[T_1..T_n]], m = (p, T_1..T_n).

/// Monomial bookkeeping for one (p, n_vars, M): graded-lex order (degree
/// ascending, then exponent vectors in descending lex order), coefficient
/// moduli p^(M - deg), and the product index table.
struct SeriesLayout {
  u64 p;
  int n_vars;
  int trunc;
  std::vector<std::vector<int>> monomials;
  std::vector<int> degree;
  std::vector<u64> coeff_mod;
  std::vector<int> product;  // size K*K, -1 when the product falls in m^M

  std::size_t size() const { return monomials.size(); }
  int index_of(const std::vector<int>& exps) const;
  int product_index(std::size_t i, std::size_t j) const { return product[i * size() + j]; }
};

std::shared_ptr<const SeriesLayout> series_layout(u64 p, int n_vars, int trunc);

class SeriesElement {
 public:
  /// The zero element.
  SeriesElement(u64 p, int n_vars, int trunc);

  /// c * p^0 * T^exps (c reduced into the monomial's coefficient range).
  static SeriesElement monomial(u64 p, int n_vars, int trunc, const std::vector<int>& exps, i64 c);
  static SeriesElement constant(u64 p, int n_vars, int trunc, i64 c);

  u64 p() const noexcept { return layout_->p; }
  int n_vars() const noexcept { return layout_->n_vars; }
  int precision() const noexcept { return layout_->trunc; }
  int trunc() const noexcept { return layout_->trunc; }
  const SeriesLayout& layout() const { return *layout_; }
  const std::vector<u64>& coefficients() const { return coeffs_; }
  u64 coefficient(const std::vector<int>& exps) const;

  /// Largest k with x in m^k, capped at M.
  int depth() const;
  int m_adic_depth() const { return depth(); }
  bool is_zero() const;
  bool is_unit() const { return coeffs_[0] % layout_->p != 0; }

  SeriesElement inverse() const;

  SeriesElement zero_like() const { return SeriesElement(layout_); }
  SeriesElement one_like() const { return from_int_like(1); }
  SeriesElement from_int_like(i64 v) const;

  SeriesElement operator-() const;
  friend SeriesElement operator+(const SeriesElement& a, const SeriesElement& b);
  friend SeriesElement operator-(const SeriesElement& a, const SeriesElement& b);
  friend SeriesElement operator*(const SeriesElement& a, const SeriesElement& b);
  friend bool operator==(const SeriesElement& a, const SeriesElement& b);

  void append_key(std::string& out) const;
  std::string to_string() const;

 private:
  explicit SeriesElement(std::shared_ptr<const SeriesLayout> layout);
  void require_same(const SeriesElement& other) const;

  std::shared_ptr<const SeriesLayout> layout_;
  std::vector<u64> coeffs_;
};

}  // namespace tamelab
