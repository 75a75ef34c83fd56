#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamelab/pcentral.hpp"

namespace tamelab {

/// [x, y] = y^(a p^k) with a a unit and k >= 1.
struct GroupInertialCertificate {
  ScalarMatrix y;
  ScalarMatrix x;
  PadicScalar a;
  int k = 1;
};

/// Smallest j with g^(p^j) = I, or none within `max_steps` p-th powers.
std::optional<int> p_power_order_exponent(const ScalarMatrix& g, int max_steps = 64);

/// g^(e p^k) with e read mod the order of g. Elements congruent to I use the
/// Z_p power directly; other elements must have p-power order.
ScalarMatrix scaled_power(const ScalarMatrix& g, const PadicScalar& e, int k);

/// Exact check of the defining identity; false for y = I, k < 1 or a non-unit.
/// Throws RingMismatch when x, y (and a) do not share p, precision and size.
bool verify_certificate(const GroupInertialCertificate& c);

struct LocalPlan {
  GroupInertialCertificate certificate;
  PadicScalar b;
  PadicScalar alpha;
  PadicScalar q_minus_1;  // b p^k
  ScalarMatrix sigma_image;  // x^alpha
  ScalarMatrix tau_image;    // y
};

/// sigma -> x^alpha, tau -> y with alpha = log(1 + b p^k) / log(1 + a p^k).
/// The tame relation [sigma, tau] = tau^(q - 1) is checked before returning.
LocalPlan build_local_plan(const GroupInertialCertificate& c, const PadicScalar& b);

/// Re-checks a plan's tame relation with plain integer powering.
bool verify_plan(const LocalPlan& plan);

struct SuiteItem {
  std::string anchor;
  std::string detail;
  bool passed = false;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteItem> items;
  std::vector<std::string> notes;

  bool passed() const;
  void add(std::string anchor, bool ok, std::string detail = {});
};

/// The three tame relations on the SL_2 generators with
/// s = diag(alpha, alpha^-1) and the determinant-one t = [[c, d], [d, c]],
/// c = (alpha + alpha^-1)/2, d = (alpha^-1 - alpha)/2, alpha^2 = qnorm.
SuiteReport sl2_tame_suite(u64 p, int precision, i64 qnorm, bool negate_alpha = false);

struct SeriesSuiteOptions {
  std::size_t m = 2;
  int k = 1;
  int n_vars = 0;
  int trunc = 3;
  u64 p = 3;
};

struct SeriesSuiteReport {
  SuiteReport report;
  int rank = 0;
  int target = 0;
  bool spanning = false;
  /// gr_k coordinates of every harvested inertial element over F_p.
  std::vector<std::vector<u64>> coordinates;
};

/// For every weight-k monomial mu = p^a0 T^a: diagonal conjugation of the
/// upper and lower unipotents by diag(u, u^-1), u = 1 - p^k, and of I + mu N by
/// the symmetric D built from u^-1, each equal to the (p^k - 1)^2 power. For
/// m > 2 every ordered pair of basis vectors gives an SL_2 embedding. Spanning
/// compares the F_p rank of the gr_k images with (m^2 - 1) * #monomials.
SeriesSuiteReport slm_series_suite(const SeriesSuiteOptions& opt);

/// Weight-k monomials (a0, a_1..a_n) with a0 + sum a_i = k.
std::vector<std::vector<int>> weight_monomials(int n_vars, int k);

/// gr_k coordinates of X - I for X = I mod m^k: one F_p entry per (matrix entry
/// except the last diagonal one) x (weight-k monomial).
std::vector<u64> gr_coordinates(const SeriesMatrix& x, int k);
int rank_mod_p(std::vector<std::vector<u64>> rows, u64 p);

struct AuditLevel {
  int level = 0;
  std::size_t certificates = 0;
  bool all_valid = true;
  bool all_in_level = true;
  bool x_in_next = true;  // only meaningful under strict mode
  std::size_t nontrivial = 0;
  int span_dim = 0;
  int target_dim = 0;
  bool spanning = false;
  bool passed = false;
};

struct AuditReport {
  std::vector<AuditLevel> levels;
  bool passed = false;
};

/// certs[n - 1] holds the certificates offered for P_n, n = 1..window.
AuditReport stable_generation_audit(const FiniteQuotientGroup& g,
                                    const std::vector<std::vector<GroupInertialCertificate>>& certs,
                                    int window, bool strict = false);

/// {x^(p^(n-1)), y^(p^(n-1)), z^(p^(n-1))} style certificates: powers of the
/// level-1 certificates, [x, y^(p^t)] = (y^(p^t))^(a p^k) holds for the same x.
std::vector<std::vector<GroupInertialCertificate>> powered_certificates(
    const std::vector<GroupInertialCertificate>& level1, int window);

enum class SearchMode {
  /// y^(a p^k) must differ from I (the meaningful case at finite modulus).
  Nontrivial,
  /// Also accept [x, y] = I when y^(p^k) = I for some admissible k.
  Any,
};

/// Exhaustive scan over x in G and k in [1, k_max], a a unit. Sound and
/// complete at the group's modulus. Throws DomainError for y = I.
std::optional<GroupInertialCertificate> brute_search_certificate(const FiniteQuotientGroup& g,
                                                                 const ScalarMatrix& y, int k_max,
                                                                 SearchMode mode = SearchMode::Nontrivial);

struct QuaternionSuiteReport {
  SuiteReport report;
  std::size_t searched_pairs = 0;
  std::size_t hits = 0;
  /// [log u, log v] = c * log w for (x, y), (x, z), (y, z), coefficients
  /// relative to log x, log y, log z; certified levels alongside.
  std::vector<std::vector<PadicScalar>> structure;
  std::vector<int> certified_levels;
};

/// A = diag(U, -U), U = [[0, p], [1, 0]], B = [[0, aI], [I, 0]] and the
/// uniform group generated by exp(pA), exp(pB), exp(pAB).
QuaternionSuiteReport quaternion_uniform_suite(i64 a, u64 p, int precision);

ScalarMatrix quaternion_a(u64 p, int precision);
ScalarMatrix quaternion_b(i64 a, u64 p, int precision);

}  // namespace tamelab
