#include "tamelab/certify.hpp"

#include <algorithm>
#include <unordered_map>

namespace tamelab {

namespace {

void require_compatible(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size() != b.size() || a.p() != b.p() || a.precision() != b.precision()) {
    throw AlgebraError(ErrorKind::RingMismatch, "matrices differ in size, prime or precision");
  }
}

ScalarMatrix diag2(const PadicScalar& a, const PadicScalar& d) {
  ScalarMatrix m(2, a);
  m(0, 0) = a;
  m(1, 1) = d;
  return m;
}

int log_p(u64 p, std::size_t n) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

std::string monomial_label(const std::vector<int>& mono) {
  std::string s = "p^" + std::to_string(mono[0]);
  for (std::size_t i = 1; i < mono.size(); ++i) {
    if (mono[i] != 0) s += " T" + std::to_string(i) + "^" + std::to_string(mono[i]);
  }
  return s;
}

}  // namespace

std::optional<int> p_power_order_exponent(const ScalarMatrix& g, int max_steps) {
  ScalarMatrix h = g;
  for (int j = 0; j <= max_steps; ++j) {
    if (h.is_identity()) return j;
    h = int_power(h, static_cast<i64>(g.p()));
  }
  return std::nullopt;
}

ScalarMatrix scaled_power(const ScalarMatrix& g, const PadicScalar& e, int k) {
  const u64 p = g.p();
  if (e.p() != p) throw AlgebraError(ErrorKind::RingMismatch, "exponent prime differs from matrix prime");
  if (congruence_depth(g) >= 1) {
    const int needed = g.precision() - congruence_depth(g);
    // e * p^k mod p^needed; p^k >= p^needed contributes nothing.
    if (k >= needed) return ScalarMatrix::identity(g.size(), g.proto());
    if (e.precision() < needed - k) {
      throw AlgebraError(ErrorKind::PrecisionMismatch, "exponent known too coarsely");
    }
    const u64 mod = checked_pow(p, needed - k);
    return int_power(g, static_cast<i64>((e.value() % mod) * checked_pow(p, k)));
  }
  const auto j = p_power_order_exponent(g);
  if (!j) throw AlgebraError(ErrorKind::DepthError, "element is neither = I mod p nor of p-power order");
  if (k >= *j) return ScalarMatrix::identity(g.size(), g.proto());
  if (e.precision() < *j - k) throw AlgebraError(ErrorKind::PrecisionMismatch, "exponent known too coarsely");
  const u64 mod = checked_pow(p, *j - k);
  return int_power(g, static_cast<i64>((e.value() % mod) * checked_pow(p, k)));
}

bool verify_certificate(const GroupInertialCertificate& c) {
  require_compatible(c.x, c.y);
  if (c.a.p() != c.y.p()) throw AlgebraError(ErrorKind::RingMismatch, "unit a lives over a different prime");
  if (c.k < 1 || !c.a.is_unit() || c.y.is_identity()) return false;
  return commutator(c.x, c.y) == scaled_power(c.y, c.a, c.k);
}

namespace {

/// x^alpha: the Z_p power when x = I mod p, else via the p-power order.
ScalarMatrix padic_power(const ScalarMatrix& x, const PadicScalar& alpha) {
  if (congruence_depth(x) >= 1) return zp_power(x, alpha);
  const auto j = p_power_order_exponent(x);
  if (!j) throw AlgebraError(ErrorKind::DepthError, "x^alpha undefined: x has order prime to p");
  if (*j == 0) return x;
  return int_power(x, static_cast<i64>(alpha.value() % checked_pow(x.p(), *j)));
}

}  // namespace

LocalPlan build_local_plan(const GroupInertialCertificate& c, const PadicScalar& b) {
  if (!verify_certificate(c)) throw AlgebraError(ErrorKind::CertificateInvalid, "[x, y] != y^(a p^k)");
  if (b.p() != c.y.p()) throw AlgebraError(ErrorKind::RingMismatch, "b lives over a different prime");
  const int n = c.y.precision();
  LocalPlan plan{c, b.at_precision(n), PadicScalar(c.y.p(), n, 0), PadicScalar(c.y.p(), n, 0), c.x, c.y};
  plan.alpha = alpha_ratio(c.a.at_precision(n), plan.b, c.k);
  plan.q_minus_1 = plan.b * pow(plan.b.from_int_like(static_cast<i64>(c.y.p())), c.k);
  plan.sigma_image = padic_power(c.x, plan.alpha);
  if (commutator(plan.sigma_image, plan.tau_image) != scaled_power(plan.tau_image, plan.b, c.k)) {
    throw AlgebraError(ErrorKind::TameRelationFailed, "[x^alpha, y] != y^(q - 1) at precision " + std::to_string(n));
  }
  return plan;
}

bool verify_plan(const LocalPlan& plan) {
  const ScalarMatrix& x = plan.certificate.x;
  const ScalarMatrix& y = plan.tau_image;
  const u64 alpha = plan.alpha.value();
  const ScalarMatrix sigma = int_power(x, static_cast<i64>(alpha));
  const u64 qm1 = plan.q_minus_1.value();
  return sigma == plan.sigma_image && commutator(sigma, y) == int_power(y, static_cast<i64>(qm1));
}

bool SuiteReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.passed; });
}

void SuiteReport::add(std::string anchor, bool ok, std::string detail) {
  items.push_back({std::move(anchor), std::move(detail), ok});
}

SuiteReport sl2_tame_suite(u64 p, int precision, i64 qnorm, bool negate_alpha) {
  const PadicScalar proto(p, precision, 0);
  if (((qnorm - 1) % static_cast<i64>(p)) != 0) {
    throw AlgebraError(ErrorKind::DomainError, "N(q) must be 1 mod p");
  }
  SuiteReport r;
  r.name = "sl2-tame";
  PadicScalar alpha = hensel_sqrt(proto.from_int_like(qnorm));
  if (negate_alpha) alpha = -alpha;
  const PadicScalar ainv = alpha.inverse();
  const PadicScalar half = proto.from_int_like(2).inverse();
  const auto pi = static_cast<i64>(p);
  const ScalarMatrix x = ScalarMatrix::from_ints(proto, {{1, pi}, {0, 1}});
  const ScalarMatrix y = ScalarMatrix::from_ints(proto, {{1, 0}, {pi, 1}});
  const ScalarMatrix z = ScalarMatrix::from_ints(proto, {{1 + pi, pi}, {-pi, 1 - pi}});
  const ScalarMatrix s = diag2(alpha, ainv);
  const PadicScalar c = (alpha + ainv) * half, d = (ainv - alpha) * half;
  ScalarMatrix t(2, proto);
  t(0, 0) = c;
  t(0, 1) = d;
  t(1, 0) = d;
  t(1, 1) = c;
  const i64 e = qnorm - 1;
  r.add("sl2/[s,x]=x^(q-1)", commutator(s, x) == int_power(x, e));
  r.add("sl2/[s^-1,y]=y^(q-1)", commutator(s.inverse(), y) == int_power(y, e));
  r.add("sl2/[t,z]=z^(q-1)", commutator(t, z) == int_power(z, e));
  // t must lie in SL_2; this is a precondition rather than a relation.
  if (t.det() == proto.one_like()) {
    r.notes.push_back("det t = 1");
  } else {
    r.add("sl2/det t=1", false, "det t = " + t.det().to_string());
  }
  ScalarMatrix asym = t;
  asym(1, 0) = -c;
  r.notes.push_back(std::string("the variant t' = [[c, d], [-c, c]] has det ") + asym.det().to_string() +
                    (asym.det() == proto.one_like() ? "" : " != 1") + "; the symmetric t is used");
  r.notes.push_back("alpha = " + alpha.to_string() + ", q - 1 = " + std::to_string(e));
  return r;
}

std::vector<std::vector<int>> weight_monomials(int n_vars, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n_vars) + 1, 0);
  // Recursive fill: position i gets values from remaining down to 0.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == cur.size()) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

std::vector<u64> gr_coordinates(const SeriesMatrix& x, int k) {
  const std::size_t m = x.size();
  const SeriesElement& proto = x.proto();
  const u64 p = proto.p();
  const auto monos = weight_monomials(proto.n_vars(), k);
  std::vector<u64> out;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (r == m - 1 && c == m - 1) continue;
      const SeriesElement v = (r == c) ? x(r, c) - proto.one_like() : x(r, c);
      for (const auto& mono : monos) {
        const std::vector<int> exps(mono.begin() + 1, mono.end());
        const u64 coef = v.coefficient(exps);
        const u64 pa = checked_pow(p, mono[0]);
        if (coef % pa != 0) throw AlgebraError(ErrorKind::DepthError, "matrix is not = I mod m^k");
        out.push_back((coef / pa) % p);
      }
    }
  }
  return out;
}

int rank_mod_p(std::vector<std::vector<u64>> rows, u64 p) {
  int rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[row]);
    const u64 inv = detail::invmod(rows[row][col] % p, p);
    for (auto& v : rows[row]) v = v * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col] % p == 0) continue;
      const u64 f = rows[i][col] % p;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] % p + p * p - f * rows[row][j] % p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

/// Places a 2x2 block at rows/cols (i, j) of an m x m matrix; the rest is the
/// identity when `unit_rest`, zero otherwise.
SeriesMatrix embed(const SeriesMatrix& b, std::size_t m, std::size_t i, std::size_t j, bool unit_rest) {
  SeriesMatrix out = unit_rest ? SeriesMatrix::identity(m, b.proto()) : SeriesMatrix(m, b.proto());
  out(i, i) = b(0, 0);
  out(i, j) = b(0, 1);
  out(j, i) = b(1, 0);
  out(j, j) = b(1, 1);
  return out;
}

SeriesMatrix block(const SeriesElement& a, const SeriesElement& b, const SeriesElement& c, const SeriesElement& d) {
  SeriesMatrix m(2, a);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

}  // namespace

SeriesSuiteReport slm_series_suite(const SeriesSuiteOptions& opt) {
  if (opt.m < 2) throw AlgebraError(ErrorKind::DomainError, "m must be at least 2");
  if (opt.k < 1 || opt.trunc <= opt.k) throw AlgebraError(ErrorKind::DomainError, "need 1 <= k < M");
  if (!is_odd_prime(opt.p)) throw AlgebraError(ErrorKind::DomainError, "p must be an odd prime");
  SeriesSuiteReport out;
  out.report.name = "series-sl" + std::to_string(opt.m);
  const SeriesElement proto(opt.p, opt.n_vars, opt.trunc);
  const auto pk = static_cast<i64>(checked_pow(opt.p, opt.k));
  const SeriesElement zero = proto.zero_like(), one = proto.one_like();
  const SeriesElement u = proto.from_int_like(1 - pk);
  const SeriesElement uinv = u.inverse();
  const SeriesElement half = proto.from_int_like(2).inverse();
  const i64 e = (pk - 1) * (pk - 1);
  // Symmetric D built from u^-1 so that D N D^-1 = u^2 N = (p^k - 1)^2 N.
  const SeriesMatrix d2 = block((uinv + u) * half, (uinv - u) * half, (uinv - u) * half, (uinv + u) * half);
  const SeriesMatrix n2 = block(one, one, -one, -one);
  const auto monos = weight_monomials(opt.n_vars, opt.k);
  std::vector<std::vector<u64>> rows;
  for (const auto& mono : monos) {
    const std::vector<int> exps(mono.begin() + 1, mono.end());
    const SeriesElement mu =
        SeriesElement::monomial(opt.p, opt.n_vars, opt.trunc, exps, static_cast<i64>(checked_pow(opt.p, mono[0])));
    bool upper_ok = true, lower_ok = true, n_ok = true, dn_ok = true;
    for (std::size_t i = 0; i < opt.m; ++i) {
      for (std::size_t j = 0; j < opt.m; ++j) {
        if (i == j) continue;
        const SeriesMatrix up = embed(block(one, mu, zero, one), opt.m, i, j, true);
        const SeriesMatrix lo = embed(block(one, zero, mu, one), opt.m, i, j, true);
        const SeriesMatrix du = embed(block(u, zero, zero, uinv), opt.m, i, j, true);
        const SeriesMatrix dui = embed(block(uinv, zero, zero, u), opt.m, i, j, true);
        upper_ok = upper_ok && (du * up * dui == int_power(up, e));
        lower_ok = lower_ok && (dui * lo * du == int_power(lo, e));
        const SeriesMatrix d = embed(d2, opt.m, i, j, true);
        const SeriesMatrix n = embed(n2, opt.m, i, j, false);
        const SeriesMatrix dinv = d.inverse();
        dn_ok = dn_ok && (d * n * dinv == proto.from_int_like(e) * n);
        const SeriesMatrix g = SeriesMatrix::identity(opt.m, proto) + mu * n;
        n_ok = n_ok && (d * g * dinv == int_power(g, e));
        for (const SeriesMatrix* h : {&up, &lo, &g}) rows.push_back(gr_coordinates(*h, opt.k));
      }
    }
    const std::string label = monomial_label(mono);
    out.report.add("series/upper " + label, upper_ok);
    out.report.add("series/lower " + label, lower_ok);
    out.report.add("series/DND^-1 " + label, dn_ok);
    out.report.add("series/D(I+muN)D^-1 " + label, n_ok);
  }
  out.rank = rank_mod_p(rows, opt.p);
  out.target = static_cast<int>((opt.m * opt.m - 1) * monos.size());
  out.spanning = out.rank == out.target;
  out.coordinates = std::move(rows);
  out.report.add("series/gr_k spanned", out.spanning,
                 "rank " + std::to_string(out.rank) + " of " + std::to_string(out.target));
  return out;
}

std::vector<std::vector<GroupInertialCertificate>> powered_certificates(
    const std::vector<GroupInertialCertificate>& level1, int window) {
  std::vector<std::vector<GroupInertialCertificate>> out;
  for (int n = 1; n <= window; ++n) {
    std::vector<GroupInertialCertificate> level;
    for (const auto& c : level1) {
      GroupInertialCertificate d = c;
      d.y = int_power(c.y, static_cast<i64>(checked_pow(c.y.p(), n - 1)));
      level.push_back(std::move(d));
    }
    out.push_back(std::move(level));
  }
  return out;
}

AuditReport stable_generation_audit(const FiniteQuotientGroup& g,
                                    const std::vector<std::vector<GroupInertialCertificate>>& certs, int window,
                                    bool strict) {
  if (window < 1 || window >= g.precision() - 1) {
    throw AlgebraError(ErrorKind::WindowTooLarge, "window must satisfy 1 <= window < precision - 1");
  }
  const PCentralChain chain = pcentral_series(g);
  AuditReport rep;
  rep.passed = true;
  for (int n = 1; n <= window; ++n) {
    const Subgroup pn = chain_term(g, chain, static_cast<std::size_t>(n));
    const Subgroup pn1 = chain_term(g, chain, static_cast<std::size_t>(n + 1));
    AuditLevel lvl;
    lvl.level = n;
    lvl.target_dim = log_p(g.p(), pn.order() / pn1.order());
    std::vector<std::size_t> seeds = pn1.generators;
    if (seeds.empty() && pn1.order() > 1) seeds = pn1.elements;
    const auto idx = static_cast<std::size_t>(n - 1);
    if (idx < certs.size()) {
      for (const auto& c : certs[idx]) {
        ++lvl.certificates;
        if (!verify_certificate(c)) lvl.all_valid = false;
        if (!scaled_power(c.y, c.a, c.k).is_identity()) ++lvl.nontrivial;
        const auto yi = g.index_of(c.y);
        if (!yi || !pn.contains(*yi)) {
          lvl.all_in_level = false;
          continue;
        }
        seeds.push_back(*yi);
        if (strict) {
          const auto xi = g.index_of(c.x);
          if (!xi || !pn1.contains(*xi)) lvl.x_in_next = false;
        }
      }
    }
    const Subgroup span = subgroup_closure(g, seeds);
    lvl.span_dim = log_p(g.p(), span.order() / pn1.order());
    lvl.spanning = span == pn;
    lvl.passed = lvl.spanning && lvl.all_valid && lvl.all_in_level && (!strict || lvl.x_in_next);
    rep.passed = rep.passed && lvl.passed;
    rep.levels.push_back(lvl);
  }
  return rep;
}

std::optional<GroupInertialCertificate> brute_search_certificate(const FiniteQuotientGroup& g, const ScalarMatrix& y,
                                                                 int k_max, SearchMode mode) {
  if (y.is_identity()) throw AlgebraError(ErrorKind::DomainError, "y must differ from the identity");
  const std::size_t yi = g.require_index(y);
  const u64 p = g.p();
  // Powers of y until the identity returns; the order is a power of p.
  std::vector<std::size_t> powers{0};
  std::unordered_map<std::size_t, u64> exponent_of{{0, 0}};
  for (std::size_t cur = yi; cur != 0; cur = g.multiply(cur, yi)) {
    exponent_of.emplace(cur, powers.size());
    powers.push_back(cur);
  }
  const int j = log_p(p, powers.size());
  for (std::size_t xi = 0; xi < g.order(); ++xi) {
    const auto it = exponent_of.find(g.commutator(xi, yi));
    if (it == exponent_of.end()) continue;
    const u64 e = it->second;
    int k = 0;
    u64 a = 1;
    if (e == 0) {
      if (mode != SearchMode::Any || j > k_max) continue;
      k = j;
    } else {
      if (e % p != 0) continue;
      k = valuation_of(p, e);
      if (k > k_max) continue;
      a = e / checked_pow(p, k);
    }
    return GroupInertialCertificate{y, g.element(xi), PadicScalar::from_residue(p, g.precision(), a), k};
  }
  return std::nullopt;
}

ScalarMatrix quaternion_a(u64 p, int precision) {
  const auto pi = static_cast<i64>(p);
  return ScalarMatrix::from_ints(PadicScalar(p, precision, 0),
                                 {{0, pi, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -pi}, {0, 0, -1, 0}});
}

ScalarMatrix quaternion_b(i64 a, u64 p, int precision) {
  return ScalarMatrix::from_ints(PadicScalar(p, precision, 0), {{0, 0, a, 0}, {0, 0, 0, a}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

QuaternionSuiteReport quaternion_uniform_suite(i64 a, u64 p, int precision) {
  if (!is_odd_prime(p)) throw AlgebraError(ErrorKind::DomainError, "p must be an odd prime");
  const u64 ar = detail::reduce_signed(a, p);
  if (ar == 0 || detail::powmod(ar, (p - 1) / 2, p) != p - 1) {
    throw AlgebraError(ErrorKind::NotNonresidue, std::to_string(a) + " is a square mod " + std::to_string(p));
  }
  QuaternionSuiteReport out;
  out.report.name = "sl4-quaternion";
  const PadicScalar proto(p, precision, 0);
  const ScalarMatrix id = ScalarMatrix::identity(4, proto);
  const ScalarMatrix am = quaternion_a(p, precision), bm = quaternion_b(a, p, precision);
  const ScalarMatrix ab = am * bm;
  const auto pi = static_cast<i64>(p);
  const ScalarMatrix expected_ab =
      ScalarMatrix::from_ints(proto, {{0, 0, 0, a * pi}, {0, 0, a, 0}, {0, -pi, 0, 0}, {-1, 0, 0, 0}});
  out.report.add("sl4/A^2=pI", am * am == proto.from_int_like(pi) * id);
  out.report.add("sl4/B^2=aI", bm * bm == proto.from_int_like(a) * id);
  out.report.add("sl4/AB=-BA", ab == -(bm * am));
  out.report.add("sl4/AB=[[0,aU],[-U,0]]", ab == expected_ab);

  const PadicScalar pp = proto.from_int_like(pi);
  const std::vector<ScalarMatrix> gens{mat_exp(pp * am), mat_exp(pp * bm), mat_exp(pp * ab)};
  bool unimodular = true;
  for (const auto& g : gens) unimodular = unimodular && g.det() == proto.one_like();
  out.report.add("sl4/det x=det y=det z=1", unimodular);

  // Candidates X = x^i y^j z^l (i, j, l < p); Y = w^(p^t) for w in {x, y, z}.
  std::vector<ScalarMatrix> xs;
  for (i64 i = 0; i < pi; ++i)
    for (i64 j = 0; j < pi; ++j)
      for (i64 l = 0; l < pi; ++l) xs.push_back(int_power(gens[0], i) * int_power(gens[1], j) * int_power(gens[2], l));
  for (const auto& w : gens) {
    for (int t = 0; t < 3 && t < precision - 1; ++t) {
      const ScalarMatrix yy = int_power(w, static_cast<i64>(checked_pow(p, t)));
      if (yy.is_identity()) continue;
      std::unordered_map<std::string, u64> power_of;
      ScalarMatrix cur = id;
      for (u64 e = 0;; ++e) {
        power_of.emplace(cur.key(), e);
        cur = cur * yy;
        if (cur.is_identity()) break;
      }
      for (const auto& xx : xs) {
        ++out.searched_pairs;
        const auto it = power_of.find(commutator(xx, yy).key());
        if (it == power_of.end() || it->second == 0 || it->second % p != 0) continue;
        ++out.hits;
      }
    }
  }
  out.report.add("sl4/no inertial certificate among cyclic directions", out.hits == 0,
                 std::to_string(out.searched_pairs) + " pairs searched");

  // Dictionary brackets against log x = pA, log y = pB, log z = pAB.
  const std::vector<ScalarMatrix> logs{pp * am, pp * bm, pp * ab};
  const PadicScalar ainv = proto.from_int_like(a).inverse();
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
  // Expected: [log x, log y] = 2p log z, [log x, log z] = 2p^2 log y, [log y, log z] = -2ap log x.
  const std::vector<std::vector<i64>> expected{{0, 0, 2 * pi}, {0, 2 * pi * pi, 0}, {-2 * a * pi, 0, 0}};
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    const auto [u, v] = pairs[q];
    const DictionaryBracket br = dictionary_bracket(gens[static_cast<std::size_t>(u)], gens[static_cast<std::size_t>(v)], 2);
    const ScalarMatrix& val = br.value;
    const std::vector<PadicScalar> coeffs{val(1, 0).divided_by_p_power(1), val(2, 0).divided_by_p_power(1),
                                          val(1, 2).divided_by_p_power(1) * ainv.truncated(precision - 1)};
    ScalarMatrix residual = val;
    for (std::size_t i = 0; i < 3; ++i) residual = residual - coeffs[i].lifted(precision) * logs[i];
    const int levels = std::min(br.certified_levels, precision - 1);
    bool match = matrix_depth(residual) >= levels;
    for (std::size_t i = 0; i < 3 && levels >= 2; ++i) {
      match = match && (coeffs[i] - coeffs[i].from_int_like(expected[q][i])).truncated(levels - 1).is_zero();
    }
    out.structure.push_back(coeffs);
    out.certified_levels.push_back(br.certified_levels);
    static const char* names[] = {"x", "y", "z"};
    out.report.add(std::string("sl4/[log ") + names[u] + ", log " + names[v] + "] structure constants", match,
                   "certified levels " + std::to_string(br.certified_levels));
  }
  return out;
}

}  // namespace tamelab
