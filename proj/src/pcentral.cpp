#include "tamelab/pcentral.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

namespace tamelab {

std::size_t default_closure_limit() {
  if (const char* env = std::getenv("TAMELAB_CLOSURE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultClosureLimit;
}

FiniteQuotientGroup FiniteQuotientGroup::closure(const std::vector<ScalarMatrix>& generators, std::size_t limit,
                                                 DepthPolicy policy) {
  if (generators.empty()) throw AlgebraError(ErrorKind::DomainError, "closure needs at least one generator");
  FiniteQuotientGroup g;
  const ScalarMatrix id = ScalarMatrix::identity(generators.front().size(), generators.front().proto());
  g.elements_.push_back(id);
  g.index_.emplace(id.key(), 0);

  std::vector<ScalarMatrix> gens;
  for (const auto& s : generators) {
    if (s.size() != id.size() || s.p() != id.p() || s.precision() != id.precision()) {
      throw AlgebraError(ErrorKind::RingMismatch, "generators must share size, prime and precision");
    }
    if (policy == DepthPolicy::RequireCongruence && congruence_depth(s) < 1) {
      throw AlgebraError(ErrorKind::DepthError, "closure generator is not = I mod p");
    }
    if (!s.is_identity()) gens.push_back(s);
  }

  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const auto& s : gens) {
      ScalarMatrix next = g.elements_[head] * s;
      std::string key = next.key();
      if (g.index_.contains(key)) continue;
      if (g.elements_.size() >= limit) {
        throw AlgebraError(ErrorKind::LimitExceeded, "closure exceeded " + std::to_string(limit) + " elements");
      }
      g.index_.emplace(std::move(key), g.elements_.size());
      g.elements_.push_back(std::move(next));
    }
  }

  std::set<std::size_t> seen;
  for (const auto& s : gens) {
    const std::size_t i = g.require_index(s);
    if (seen.insert(i).second) g.generators_.push_back(i);
  }

  std::size_t n = g.elements_.size();
  const u64 p = id.p();
  while (n % p == 0) {
    n /= p;
    ++g.order_exponent_;
  }
  if (n != 1) throw AlgebraError(ErrorKind::DomainError, "closure order is not a power of p");
  return g;
}

std::optional<std::size_t> FiniteQuotientGroup::index_of(const ScalarMatrix& g) const {
  const auto it = index_.find(g.key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteQuotientGroup::require_index(const ScalarMatrix& g) const {
  const auto i = index_of(g);
  if (!i) throw AlgebraError(ErrorKind::DomainError, "matrix is not an element of the group");
  return *i;
}

std::size_t FiniteQuotientGroup::multiply(std::size_t a, std::size_t b) const {
  return require_index(elements_[a] * elements_[b]);
}

std::size_t FiniteQuotientGroup::inverse(std::size_t a) const { return require_index(elements_[a].inverse()); }

std::size_t FiniteQuotientGroup::power(std::size_t a, i64 e) const {
  return require_index(int_power(elements_[a], e));
}

std::size_t FiniteQuotientGroup::commutator(std::size_t a, std::size_t b) const {
  return require_index(tamelab::commutator(elements_[a], elements_[b]));
}

// ---------------------------------------------------------------------------

Subgroup whole_group(const FiniteQuotientGroup& g) {
  Subgroup s;
  s.member.assign(g.order(), 1);
  s.elements.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) s.elements[i] = i;
  s.generators = g.generators();
  return s;
}

namespace {

Subgroup generate(const FiniteQuotientGroup& g, const std::vector<std::size_t>& gens) {
  Subgroup s;
  s.member.assign(g.order(), 0);
  s.member[0] = 1;
  s.elements.push_back(0);
  s.generators = gens;
  for (std::size_t head = 0; head < s.elements.size(); ++head) {
    for (std::size_t gen : gens) {
      const std::size_t next = g.multiply(s.elements[head], gen);
      if (s.member[next]) continue;
      s.member[next] = 1;
      s.elements.push_back(next);
    }
  }
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

// Adds seeds one at a time; in a p-group at most log_p |G| of them are new.
bool absorb(const FiniteQuotientGroup& g, Subgroup& s, const std::vector<std::size_t>& seeds) {
  bool grew = false;
  for (std::size_t x : seeds) {
    if (s.member[x]) continue;
    std::vector<std::size_t> gens = s.generators;
    gens.push_back(x);
    s = generate(g, gens);
    grew = true;
  }
  return grew;
}

// Coset label of each element of h relative to the normal subgroup k; -1 outside h.
std::vector<long> coset_labels(const FiniteQuotientGroup& g, const Subgroup& h, const Subgroup& k, long& count) {
  std::vector<long> label(g.order(), -1);
  count = 0;
  for (std::size_t x : h.elements) {
    if (label[x] >= 0) continue;
    for (std::size_t y : k.elements) label[g.multiply(x, y)] = count;
    ++count;
  }
  return label;
}

int log_p(u64 p, std::size_t n) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

Subgroup subgroup_closure(const FiniteQuotientGroup& g, const std::vector<std::size_t>& seeds) {
  Subgroup s = generate(g, {});
  absorb(g, s, seeds);
  return s;
}

Subgroup normal_closure(const FiniteQuotientGroup& g, const std::vector<std::size_t>& seeds) {
  Subgroup s = subgroup_closure(g, seeds);
  std::vector<std::size_t> conj_by;
  for (std::size_t x : g.generators()) conj_by.push_back(x);
  std::vector<std::size_t> inverses;
  for (std::size_t x : conj_by) inverses.push_back(g.inverse(x));
  for (bool changed = true; changed;) {
    std::vector<std::size_t> extra;
    for (std::size_t c = 0; c < conj_by.size(); ++c) {
      for (std::size_t h : s.generators) {
        const std::size_t img = g.multiply(g.multiply(conj_by[c], h), inverses[c]);
        if (!s.member[img]) extra.push_back(img);
      }
    }
    changed = absorb(g, s, extra);
  }
  return s;
}

Subgroup depth_filtration(const FiniteQuotientGroup& g, int k) {
  Subgroup s;
  s.member.assign(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (congruence_depth(g.element(i)) >= k) {
      s.member[i] = 1;
      s.elements.push_back(i);
    }
  }
  return s;
}

PCentralChain pcentral_series(const FiniteQuotientGroup& g) {
  PCentralChain chain;
  chain.terms.push_back(whole_group(g));
  const auto p = static_cast<i64>(g.p());
  while (chain.terms.back().order() > 1) {
    const Subgroup& cur = chain.terms.back();
    std::vector<std::size_t> seeds;
    seeds.reserve(cur.order() * (1 + g.generators().size()));
    for (std::size_t h : cur.elements) {
      seeds.push_back(g.power(h, p));
      for (std::size_t x : g.generators()) seeds.push_back(g.commutator(x, h));
    }
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    Subgroup next = normal_closure(g, seeds);
    if (next.order() == cur.order()) {
      throw AlgebraError(ErrorKind::DomainError, "p-central series stalled; the group is not a p-group");
    }
    chain.dims.push_back(log_p(g.p(), cur.order() / next.order()));
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

Subgroup chain_term(const FiniteQuotientGroup& g, const PCentralChain& chain, std::size_t n) {
  if (n >= 1 && n <= chain.terms.size()) return chain.terms[n - 1];
  return subgroup_closure(g, {});
}

UniformityReport uniformity_check(const FiniteQuotientGroup& g, int window) {
  if (window < 1 || window >= g.precision() - 1) {
    throw AlgebraError(ErrorKind::WindowTooLarge, "window " + std::to_string(window) + " needs 1 <= window < N - 1 = " +
                                                      std::to_string(g.precision() - 1));
  }
  UniformityReport report;
  report.window = window;
  const PCentralChain chain = pcentral_series(g);
  report.dims = chain.dims;
  const auto p = static_cast<i64>(g.p());

  std::vector<std::size_t> powers;
  for (std::size_t x = 0; x < g.order(); ++x) powers.push_back(g.power(x, p));
  const Subgroup gp = subgroup_closure(g, powers);
  report.quotient_abelian = true;
  for (std::size_t a : g.generators()) {
    for (std::size_t b : g.generators()) {
      if (!gp.contains(g.commutator(a, b))) report.quotient_abelian = false;
    }
  }

  bool all = true;
  for (int n = 1; n <= window; ++n) {
    const Subgroup pn = chain_term(g, chain, static_cast<std::size_t>(n));
    const Subgroup pn1 = chain_term(g, chain, static_cast<std::size_t>(n) + 1);
    const Subgroup pn2 = chain_term(g, chain, static_cast<std::size_t>(n) + 2);
    long src_count = 0, dst_count = 0;
    const auto src = coset_labels(g, pn, pn1, src_count);
    const auto dst = coset_labels(g, pn1, pn2, dst_count);
    std::vector<long> image(static_cast<std::size_t>(src_count), -1);
    bool well_defined = true;
    for (std::size_t x : pn.elements) {
      const std::size_t xp = g.power(x, p);
      const long target = dst[xp];
      if (target < 0) {
        well_defined = false;
        break;
      }
      long& slot = image[static_cast<std::size_t>(src[x])];
      if (slot >= 0 && slot != target) well_defined = false;
      slot = target;
    }
    std::set<long> distinct(image.begin(), image.end());
    UniformityLevel level;
    level.level = n;
    level.dim = log_p(g.p(), static_cast<std::size_t>(src_count));
    level.next_dim = log_p(g.p(), static_cast<std::size_t>(dst_count));
    level.bijective = well_defined && src_count == dst_count && static_cast<long>(distinct.size()) == src_count;
    all = all && level.bijective;
    report.levels.push_back(level);
  }
  report.uniform = report.quotient_abelian && all;
  return report;
}

DictionaryBracket dictionary_bracket(const ScalarMatrix& g, const ScalarMatrix& h, int steps) {
  if (steps < 1) throw AlgebraError(ErrorKind::DomainError, "dictionary_bracket needs steps >= 1");
  if (congruence_depth(g) < 1 || congruence_depth(h) < 1) {
    throw AlgebraError(ErrorKind::DepthError, "dictionary_bracket needs g, h = I mod p");
  }
  const int n = g.precision();
  const u64 p = g.p();
  std::optional<ScalarMatrix> previous;
  DictionaryBracket out{ScalarMatrix(g.size(), g.proto()), 0, steps};
  for (int step = 0; step <= steps; ++step) {
    const int w = n + 2 * step;
    u64 pn = 0;
    try {
      (void)checked_pow(p, w);
      pn = checked_pow(p, step);
    } catch (const AlgebraError&) {
      throw AlgebraError(ErrorKind::InsufficientPrecision,
                         "working precision " + std::to_string(w) + " exceeds the modulus cap");
    }
    const ScalarMatrix a = int_power(lift(g, w), static_cast<i64>(pn));
    const ScalarMatrix b = int_power(lift(h, w), static_cast<i64>(pn));
    const ScalarMatrix c = tamelab::commutator(a, b);
    const ScalarMatrix value = truncate(divide_by_p_power(mat_log(c), 2 * step), n);
    if (previous) out.certified_levels = matrix_depth(value - *previous);
    previous = value;
    out.value = value;
  }
  if (out.certified_levels < 1) {
    throw AlgebraError(ErrorKind::InsufficientPrecision, "bracket iterates did not stabilise");
  }
  return out;
}

std::vector<ScalarMatrix> semidirect_example_generators(u64 p) {
  const int n = 3;
  const PadicScalar proto(p, n, 0);
  const std::size_t dim = static_cast<std::size_t>(p);  // (p-1) lattice coordinates + affine slot
  ScalarMatrix t(dim, proto);
  for (std::size_t i = 0; i + 2 < dim; ++i) t(i + 1, i) = proto.one_like();
  for (std::size_t i = 0; i + 1 < dim; ++i) t(i, dim - 2) = -proto.one_like();
  t(dim - 1, dim - 1) = proto.one_like();
  ScalarMatrix a1 = ScalarMatrix::identity(dim, proto);
  a1(0, dim - 1) = proto.from_int_like(static_cast<i64>(p));
  return {t, a1};
}

}  // namespace tamelab
