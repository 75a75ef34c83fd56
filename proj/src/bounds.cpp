#include "tamelab/bounds.hpp"

#include <algorithm>
#include <memory>

namespace tamelab {

Interval::Interval() {
  mpfr_init2(lo_, kPrecision);
  mpfr_init2(hi_, kPrecision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) : Interval() {
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) : Interval() {
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_decimal(const std::string& s) {
  Interval r;
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 || mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
    // mpfr_set_str returns nonzero only for malformed input.
    throw AlgebraError(ErrorKind::DomainError, "not a decimal number: " + s);
  }
  return r;
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma() {
  Interval r;
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  if (mpfr_sgn(a.lo_) < 0 || mpfr_sgn(b.lo_) < 0) {
    throw AlgebraError(ErrorKind::DomainError, "interval product needs nonnegative operands");
  }
  Interval r;
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(a.lo_) < 0 || mpfr_sgn(b.lo_) <= 0) {
    throw AlgebraError(ErrorKind::DomainError, "interval quotient needs a >= 0, b > 0");
  }
  Interval r;
  mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (mpfr_sgn(lo_) <= 0) throw AlgebraError(ErrorKind::DomainError, "log of a nonpositive interval");
  Interval r;
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw AlgebraError(ErrorKind::DomainError, "sqrt of a negative interval");
  Interval r;
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

bool Interval::certainly_greater(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_) != 0; }
bool Interval::certainly_not_greater(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_) != 0; }
double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {

std::string format(const mpfr_t x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe", digits - 1, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return format(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_string(int digits) const { return format(hi_, digits, MPFR_RNDU); }
std::string Interval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

Interval real_place_constant(bool grh) {
  const Interval gamma = Interval::euler_gamma(), pi = Interval::pi();
  const Interval half = Interval(1) / Interval(2);
  if (grh) return half * (pi / Interval(2) + gamma + (Interval(8) * pi).log());
  return half * (gamma + (Interval(4) * pi).log());
}

Interval complex_place_constant(bool grh) {
  const Interval gamma = Interval::euler_gamma(), pi = Interval::pi();
  return gamma + (Interval(grh ? 8 : 2) * pi).log();
}

SplittingBoundResult splitting_bound(const SplittingBoundInput& in) {
  if (in.r1 < 0 || in.r2 < 0 || in.r1 + 2 * in.r2 < 1) {
    throw AlgebraError(ErrorKind::InvalidSignature, "need r1, r2 >= 0 and r1 + 2 r2 >= 1");
  }
  const Interval disc = Interval::from_decimal(in.abs_discriminant);
  if (disc.lo_double() < 1.0) {
    throw AlgebraError(ErrorKind::DomainError, "|d_K| must be >= 1");
  }
  SplittingBoundResult r;
  for (long n : in.prime_norms) {
    if (n < 2) throw AlgebraError(ErrorKind::DomainError, "prime norms must be >= 2");
    const Interval norm(n);
    const Interval den = in.grh ? norm.sqrt() - Interval(1) : norm - Interval(1);
    r.alpha_finite = r.alpha_finite + norm.log() / den;
  }
  const Interval real = real_place_constant(in.grh), complex = complex_place_constant(in.grh);
  for (long i = 0; i < in.r1; ++i) r.alpha_infinite = r.alpha_infinite + real;
  for (long i = 0; i < in.r2; ++i) r.alpha_infinite = r.alpha_infinite + complex;
  r.threshold = disc.log() / Interval(2);
  const Interval total = r.alpha_finite + r.alpha_infinite;
  if (total.certainly_greater(r.threshold)) {
    r.verdict = Verdict::True;
  } else if (total.certainly_not_greater(r.threshold)) {
    r.verdict = Verdict::False;
  }
  return r;
}

long selmer_dim(long r1, long r2, long clp) {
  if (r1 < 0 || r2 < 0 || clp < 0 || r1 + 2 * r2 < 1) {
    throw AlgebraError(ErrorKind::InvalidSignature, "need r1, r2, clp >= 0 and r1 + 2 r2 >= 1");
  }
  return r1 + r2 - 1 + clp;
}

long ramification_budget(long order_exponent, long z0) {
  if (order_exponent < 0 || z0 < 0) throw AlgebraError(ErrorKind::DomainError, "budget inputs must be >= 0");
  return order_exponent + z0;
}

mpq_class gs_polynomial(long d, const std::vector<long>& degrees, const mpq_class& t) {
  mpq_class f = 1 - d * t;
  for (long e : degrees) {
    mpq_class pw = 1;
    for (long i = 0; i < e; ++i) pw *= t;
    f += pw;
  }
  return f;
}

GSResult gs_negative(long d, const std::vector<long>& degrees, long grid_points) {
  if (grid_points < 10) throw AlgebraError(ErrorKind::DomainError, "grid_points must be >= 10");
  if (d < 1) throw AlgebraError(ErrorKind::DomainError, "need at least one generator");
  if (std::any_of(degrees.begin(), degrees.end(), [](long e) { return e < 2; })) {
    throw AlgebraError(ErrorKind::DomainError, "relation degrees must be >= 2");
  }
  GSResult r;
  bool first = true;
  for (long i = 1; i < grid_points; ++i) {
    mpq_class t(i, grid_points);
    t.canonicalize();
    const mpq_class f = gs_polynomial(d, degrees, t);
    if (first || f < r.min_value) {
      r.min_value = f;
      r.min_t = t;
      first = false;
    }
  }
  r.negative = r.min_value < 0;
  if (r.negative) {
    r.witness_t = r.min_t;
    r.witness_value = r.min_value;
  }
  return r;
}

}  // namespace tamelab
