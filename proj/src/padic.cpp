#include "tamelab/padic.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace tamelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PrecisionMismatch: return "PrecisionMismatch";
    case ErrorKind::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::NonResidue: return "NonResidue";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DepthError: return "DepthError";
    case ErrorKind::NonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::TameRelationFailed: return "TameRelationFailed";
    case ErrorKind::NotNonresidue: return "NotNonresidue";
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

bool is_odd_prime(u64 n) {
  if (n < 3 || n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 checked_pow(u64 p, int n) {
  constexpr u64 kLimit = u64{1} << 62;
  u64 r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > kLimit / p) {
      throw AlgebraError(ErrorKind::PrecisionOverflow,
                         std::to_string(p) + "^" + std::to_string(n) + " exceeds the 2^62 modulus cap");
    }
    r *= p;
  }
  return r;
}

int valuation_of(u64 p, u64 n) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

namespace detail {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    const i64 q = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - q * new_r);
  }
  if (r != 1) throw AlgebraError(ErrorKind::NonUnit, "inverse of a non-unit");
  return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

u64 reduce_signed(i64 v, u64 m) {
  if (v >= 0) return static_cast<u64>(v) % m;
  // -(v+1) avoids overflow at INT64_MIN.
  const u64 neg = (static_cast<u64>(-(v + 1)) % m + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

int factorial_valuation(u64 p, u64 i) {
  u64 digit_sum = 0;
  for (u64 n = i; n != 0; n /= p) digit_sum += n % p;
  return static_cast<int>((i - digit_sum) / (p - 1));
}

namespace {
int floor_log(u64 p, u64 n) {
  int r = 0;
  while (n >= p) {
    n /= p;
    ++r;
  }
  return r;
}
}  // namespace

SeriesPlan log_series_plan(u64 p, int prec, int arg_val) {
  SeriesPlan plan;
  if (arg_val >= prec) return plan;
  // i*v - floor(log_p i) is a nondecreasing lower bound for v(x^i / i).
  for (u64 i = 1;; ++i) {
    const i64 lower = static_cast<i64>(i) * arg_val - floor_log(p, i);
    if (lower >= prec) break;
    const i64 exact = static_cast<i64>(i) * arg_val - valuation_of(p, i);
    if (exact < prec) plan.last_term = static_cast<int>(i);
  }
  plan.extra_levels = floor_log(p, static_cast<u64>(plan.last_term));
  return plan;
}

SeriesPlan exp_series_plan(u64 p, int prec, int arg_val) {
  SeriesPlan plan;
  if (arg_val >= prec) return plan;
  // v_p(i!) <= floor((i-1)/(p-1)) gives a nondecreasing lower bound.
  for (u64 i = 1;; ++i) {
    const i64 lower = static_cast<i64>(i) * arg_val - static_cast<i64>((i - 1) / (p - 1));
    if (lower >= prec) break;
    const i64 exact = static_cast<i64>(i) * arg_val - factorial_valuation(p, i);
    if (exact < prec) plan.last_term = static_cast<int>(i);
  }
  plan.extra_levels = factorial_valuation(p, static_cast<u64>(plan.last_term));
  return plan;
}

}  // namespace detail

// ---------------------------------------------------------------------------

PadicScalar::PadicScalar(u64 p, int precision, i64 value) : p_(p), prec_(precision) {
  if (!is_odd_prime(p)) throw AlgebraError(ErrorKind::DomainError, std::to_string(p) + " is not an odd prime");
  if (precision < 1) throw AlgebraError(ErrorKind::DomainError, "precision must be >= 1");
  mod_ = checked_pow(p, precision);
  value_ = detail::reduce_signed(value, mod_);
}

PadicScalar PadicScalar::from_residue(u64 p, int precision, u64 residue) {
  PadicScalar r(p, precision, 0);
  r.value_ = residue % r.mod_;
  return r;
}

int PadicScalar::valuation() const {
  if (value_ == 0) return prec_;
  return valuation_of(p_, value_);
}

void PadicScalar::require_same(const PadicScalar& other) const {
  if (p_ != other.p_ || prec_ != other.prec_) {
    throw AlgebraError(ErrorKind::PrecisionMismatch,
                       "operands at (p=" + std::to_string(p_) + ", N=" + std::to_string(prec_) + ") and (p=" +
                           std::to_string(other.p_) + ", N=" + std::to_string(other.prec_) + ")");
  }
}

PadicScalar PadicScalar::inverse() const {
  if (!is_unit()) throw AlgebraError(ErrorKind::NonUnit, "inverse of " + to_string());
  return PadicScalar(p_, prec_, mod_, detail::invmod(value_, mod_));
}

PadicScalar PadicScalar::truncated(int precision) const {
  if (precision > prec_) throw AlgebraError(ErrorKind::PrecisionMismatch, "truncation cannot raise precision");
  return from_residue(p_, precision, value_);
}

PadicScalar PadicScalar::lifted(int precision) const {
  if (precision < prec_) throw AlgebraError(ErrorKind::PrecisionMismatch, "lift cannot lower precision");
  return from_residue(p_, precision, value_);
}

PadicScalar PadicScalar::at_precision(int precision) const {
  return from_residue(p_, precision, value_);
}

PadicScalar PadicScalar::divided_by_p_power(int k) const {
  if (k == 0) return *this;
  if (k >= prec_ || valuation() < k) {
    throw AlgebraError(ErrorKind::DomainError, "exact division by p^" + std::to_string(k) + " of " + to_string());
  }
  const u64 pk = checked_pow(p_, k);
  return from_residue(p_, prec_ - k, value_ / pk);
}

PadicScalar PadicScalar::operator-() const {
  return PadicScalar(p_, prec_, mod_, value_ == 0 ? 0 : mod_ - value_);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  a.require_same(b);
  u64 s = a.value_ + b.value_;
  if (s >= a.mod_) s -= a.mod_;
  return PadicScalar(a.p_, a.prec_, a.mod_, s);
}

PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) {
  a.require_same(b);
  const u64 d = a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.mod_ - b.value_);
  return PadicScalar(a.p_, a.prec_, a.mod_, d);
}

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  a.require_same(b);
  return PadicScalar(a.p_, a.prec_, a.mod_, detail::mulmod(a.value_, b.value_, a.mod_));
}

void PadicScalar::append_key(std::string& out) const {
  out.append(reinterpret_cast<const char*>(&value_), sizeof(value_));
}

std::string PadicScalar::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(p_) + "^" + std::to_string(prec_);
}

PadicScalar pow(const PadicScalar& x, i64 e) {
  if (e < 0) return pow(x.inverse(), -(e + 1)) * x.inverse();
  return PadicScalar::from_residue(x.p(), x.precision(), detail::powmod(x.value(), static_cast<u64>(e), x.modulus()));
}

PadicScalar hensel_sqrt(const PadicScalar& u) {
  if (!u.is_unit()) throw AlgebraError(ErrorKind::NonUnit, "hensel_sqrt of " + u.to_string());
  const u64 p = u.p();
  u64 r0 = 0;
  for (u64 r = 1; r < p; ++r) {
    if (r * r % p == u.value() % p) {
      r0 = r;
      break;
    }
  }
  if (r0 == 0) throw AlgebraError(ErrorKind::NonResidue, u.to_string() + " is not a square mod p");
  PadicScalar r = u.from_int_like(static_cast<i64>(r0));
  const PadicScalar two = u.from_int_like(2);
  // Newton doubles the number of correct levels each round.
  for (int correct = 1; correct < u.precision(); correct *= 2) {
    r = r - (r * r - u) * (two * r).inverse();
  }
  return r;
}

PadicScalar plog(const PadicScalar& u) {
  const u64 p = u.p();
  const int n = u.precision();
  if (u.value() % p != 1 % p) throw AlgebraError(ErrorKind::DomainError, "plog needs u = 1 mod p, got " + u.to_string());
  const PadicScalar x = u - u.one_like();
  const detail::SeriesPlan plan = detail::log_series_plan(p, n, x.valuation());
  if (plan.last_term == 0) return u.zero_like();
  const int w = n + plan.extra_levels;
  const PadicScalar xw = x.lifted(w);
  PadicScalar power = xw.one_like();
  PadicScalar sum = u.zero_like();
  for (int i = 1; i <= plan.last_term; ++i) {
    power = power * xw;
    const int vi = valuation_of(p, static_cast<u64>(i));
    const u64 unit = static_cast<u64>(i) / checked_pow(p, vi);
    PadicScalar term = power.divided_by_p_power(vi).truncated(n) * u.from_int_like(static_cast<i64>(unit)).inverse();
    sum = (i % 2 == 1) ? sum + term : sum - term;
  }
  return sum;
}

PadicScalar pexp(const PadicScalar& x) {
  const u64 p = x.p();
  const int n = x.precision();
  if (x.value() % p != 0) throw AlgebraError(ErrorKind::DomainError, "pexp needs x = 0 mod p, got " + x.to_string());
  const detail::SeriesPlan plan = detail::exp_series_plan(p, n, x.valuation());
  const int w = n + plan.extra_levels;
  const PadicScalar xw = x.lifted(w);
  PadicScalar power = xw.one_like();
  PadicScalar unit_fact = x.one_like();
  PadicScalar sum = x.one_like();
  for (int i = 1; i <= plan.last_term; ++i) {
    power = power * xw;
    const int vi = valuation_of(p, static_cast<u64>(i));
    unit_fact = unit_fact * x.from_int_like(static_cast<i64>(static_cast<u64>(i) / checked_pow(p, vi)));
    const int vf = detail::factorial_valuation(p, static_cast<u64>(i));
    sum = sum + power.divided_by_p_power(vf).truncated(n) * unit_fact.inverse();
  }
  return sum;
}

PadicScalar alpha_ratio(const PadicScalar& a, const PadicScalar& b, int k) {
  if (a.p() != b.p() || a.precision() != b.precision()) {
    throw AlgebraError(ErrorKind::PrecisionMismatch, "alpha_ratio operands differ in (p, N)");
  }
  if (!a.is_unit()) throw AlgebraError(ErrorKind::DomainError, "alpha_ratio needs a unit a, got " + a.to_string());
  if (k < 1) throw AlgebraError(ErrorKind::DomainError, "alpha_ratio needs k >= 1");
  const int n = a.precision();
  const int w = n + k + 2;
  const PadicScalar pk = PadicScalar(a.p(), w, 0).from_int_like(static_cast<i64>(checked_pow(a.p(), k)));
  const PadicScalar one = pk.one_like();
  const PadicScalar log_a = plog(one + a.lifted(w) * pk);
  const PadicScalar log_b = plog(one + b.lifted(w) * pk);
  // v(log(1 + a p^k)) = k exactly since p is odd and a is a unit.
  const PadicScalar num = log_b.divided_by_p_power(k);
  const PadicScalar den = log_a.divided_by_p_power(k);
  return (num * den.inverse()).truncated(n);
}

// ---------------------------------------------------------------------------

int SeriesLayout::index_of(const std::vector<int>& exps) const {
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i] == exps) return static_cast<int>(i);
  }
  return -1;
}

namespace {

void monomials_of_degree(int n_vars, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n_vars - 1) {
    cur.push_back(deg);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur.push_back(e);
    monomials_of_degree(n_vars, deg - e, cur, out);
    cur.pop_back();
  }
}

std::shared_ptr<const SeriesLayout> build_layout(u64 p, int n_vars, int trunc) {
  auto layout = std::make_shared<SeriesLayout>();
  layout->p = p;
  layout->n_vars = n_vars;
  layout->trunc = trunc;
  for (int d = 0; d < trunc; ++d) {
    if (n_vars == 0) {
      if (d == 0) layout->monomials.emplace_back();
      continue;
    }
    std::vector<int> cur;
    monomials_of_degree(n_vars, d, cur, layout->monomials);
  }
  for (const auto& m : layout->monomials) {
    int d = 0;
    for (int e : m) d += e;
    layout->degree.push_back(d);
    layout->coeff_mod.push_back(checked_pow(p, trunc - d));
  }
  const std::size_t k = layout->size();
  layout->product.assign(k * k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (layout->degree[i] + layout->degree[j] >= trunc) continue;
      std::vector<int> s(static_cast<std::size_t>(n_vars));
      for (int v = 0; v < n_vars; ++v) s[v] = layout->monomials[i][v] + layout->monomials[j][v];
      layout->product[i * k + j] = layout->index_of(s);
    }
  }
  return layout;
}

}  // namespace

std::shared_ptr<const SeriesLayout> series_layout(u64 p, int n_vars, int trunc) {
  if (!is_odd_prime(p)) throw AlgebraError(ErrorKind::DomainError, std::to_string(p) + " is not an odd prime");
  if (n_vars < 0 || trunc < 1) throw AlgebraError(ErrorKind::DomainError, "series needs n_vars >= 0 and M >= 1");
  static std::mutex mutex;
  static std::map<std::tuple<u64, int, int>, std::shared_ptr<const SeriesLayout>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, n_vars, trunc}];
  if (!slot) slot = build_layout(p, n_vars, trunc);
  return slot;
}

SeriesElement::SeriesElement(std::shared_ptr<const SeriesLayout> layout)
    : layout_(std::move(layout)), coeffs_(layout_->size(), 0) {}

SeriesElement::SeriesElement(u64 p, int n_vars, int trunc) : SeriesElement(series_layout(p, n_vars, trunc)) {}

SeriesElement SeriesElement::monomial(u64 p, int n_vars, int trunc, const std::vector<int>& exps, i64 c) {
  SeriesElement r(p, n_vars, trunc);
  if (static_cast<int>(exps.size()) != n_vars) throw AlgebraError(ErrorKind::DomainError, "exponent vector length");
  const int idx = r.layout_->index_of(exps);
  if (idx < 0) return r;  // the monomial already lies in m^M
  r.coeffs_[idx] = detail::reduce_signed(c, r.layout_->coeff_mod[idx]);
  return r;
}

SeriesElement SeriesElement::constant(u64 p, int n_vars, int trunc, i64 c) {
  return SeriesElement(p, n_vars, trunc).from_int_like(c);
}

SeriesElement SeriesElement::from_int_like(i64 v) const {
  SeriesElement r(layout_);
  r.coeffs_[0] = detail::reduce_signed(v, layout_->coeff_mod[0]);
  return r;
}

u64 SeriesElement::coefficient(const std::vector<int>& exps) const {
  const int idx = layout_->index_of(exps);
  return idx < 0 ? 0 : coeffs_[idx];
}

int SeriesElement::depth() const {
  int best = layout_->trunc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    best = std::min(best, layout_->degree[i] + valuation_of(layout_->p, coeffs_[i]));
  }
  return best;
}

bool SeriesElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

void SeriesElement::require_same(const SeriesElement& other) const {
  if (layout_ != other.layout_) {
    throw AlgebraError(ErrorKind::PrecisionMismatch, "series operands differ in (p, n_vars, M)");
  }
}

SeriesElement SeriesElement::operator-() const {
  SeriesElement r(layout_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    r.coeffs_[i] = coeffs_[i] == 0 ? 0 : layout_->coeff_mod[i] - coeffs_[i];
  }
  return r;
}

SeriesElement operator+(const SeriesElement& a, const SeriesElement& b) {
  a.require_same(b);
  SeriesElement r(a.layout_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const u64 m = a.layout_->coeff_mod[i];
    u64 s = a.coeffs_[i] + b.coeffs_[i];
    r.coeffs_[i] = s >= m ? s - m : s;
  }
  return r;
}

SeriesElement operator-(const SeriesElement& a, const SeriesElement& b) { return a + (-b); }

SeriesElement operator*(const SeriesElement& a, const SeriesElement& b) {
  a.require_same(b);
  const SeriesLayout& lay = *a.layout_;
  SeriesElement r(a.layout_);
  const std::size_t k = lay.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      const int t = lay.product_index(i, j);
      if (t < 0 || b.coeffs_[j] == 0) continue;
      const u64 m = lay.coeff_mod[t];
      r.coeffs_[t] = (r.coeffs_[t] + detail::mulmod(a.coeffs_[i] % m, b.coeffs_[j] % m, m)) % m;
    }
  }
  return r;
}

bool operator==(const SeriesElement& a, const SeriesElement& b) {
  return a.layout_ == b.layout_ && a.coeffs_ == b.coeffs_;
}

SeriesElement SeriesElement::inverse() const {
  if (!is_unit()) throw AlgebraError(ErrorKind::NonUnit, "inverse of series " + to_string());
  const u64 m0 = layout_->coeff_mod[0];
  const SeriesElement c0_inv = from_int_like(static_cast<i64>(detail::invmod(coeffs_[0], m0)));
  // u = c0 (1 + w) with w in (T); (1 + w)^-1 = sum (-w)^i, and w^M = 0.
  const SeriesElement w = c0_inv * *this - one_like();
  SeriesElement term = one_like();
  SeriesElement sum = one_like();
  for (int i = 1; i < layout_->trunc; ++i) {
    term = term * (-w);
    sum = sum + term;
  }
  return sum * c0_inv;
}

void SeriesElement::append_key(std::string& out) const {
  out.append(reinterpret_cast<const char*>(coeffs_.data()), coeffs_.size() * sizeof(u64));
}

std::string SeriesElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    for (int v = 0; v < layout_->n_vars; ++v) {
      const int e = layout_->monomials[i][v];
      if (e == 0) continue;
      os << "*T" << (v + 1);
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " mod m^" << layout_->trunc;
  return os.str();
}

}  // namespace tamelab
