#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tamelab/matrix.hpp"

namespace tamelab {

inline constexpr std::size_t kDefaultClosureLimit = 1'000'000;

/// kDefaultClosureLimit unless TAMELAB_CLOSURE_LIMIT holds a positive integer.
std::size_t default_closure_limit();

/// A finite matrix group mod p^N, enumerated by breadth-first closure.
/// Element 0 is the identity; elements are stored by canonical entry key.
class FiniteQuotientGroup {
 public:
  enum class DepthPolicy { RequireCongruence, AllowAny };

  static FiniteQuotientGroup closure(const std::vector<ScalarMatrix>& generators,
                                     std::size_t limit = default_closure_limit(),
                                     DepthPolicy policy = DepthPolicy::RequireCongruence);

  std::size_t order() const noexcept { return elements_.size(); }
  /// e with |G| = p^e.
  int order_exponent() const noexcept { return order_exponent_; }
  u64 p() const { return elements_.front().p(); }
  int precision() const { return elements_.front().precision(); }
  std::size_t degree() const { return elements_.front().size(); }

  const ScalarMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<ScalarMatrix>& elements() const noexcept { return elements_; }
  /// Indices of the generators passed to closure (deduplicated, identity dropped).
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  std::optional<std::size_t> index_of(const ScalarMatrix& g) const;
  /// Index of g, throwing DomainError when g is not in the group.
  std::size_t require_index(const ScalarMatrix& g) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t power(std::size_t a, i64 e) const;
  std::size_t commutator(std::size_t a, std::size_t b) const;

 private:
  std::vector<ScalarMatrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> generators_;
  int order_exponent_ = 0;
};

/// A subgroup given by membership flags over the ambient group's indices.
struct Subgroup {
  std::vector<std::size_t> elements;
  std::vector<char> member;
  std::vector<std::size_t> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(std::size_t i) const { return member[i] != 0; }
  bool operator==(const Subgroup& other) const { return member == other.member; }
};

Subgroup whole_group(const FiniteQuotientGroup& g);
/// Smallest subgroup containing the seeds.
Subgroup subgroup_closure(const FiniteQuotientGroup& g, const std::vector<std::size_t>& seeds);
/// Smallest normal subgroup containing the seeds.
Subgroup normal_closure(const FiniteQuotientGroup& g, const std::vector<std::size_t>& seeds);
/// Elements of g whose matrices are congruent to I mod p^k.
Subgroup depth_filtration(const FiniteQuotientGroup& g, int k);

struct PCentralChain {
  std::vector<Subgroup> terms;  // P_1 = G, ..., last term trivial
  std::vector<int> dims;        // d_n = log_p |P_n / P_{n+1}|
};

/// P_{n+1} = P_n^p [G, P_n], computed as the normal closure of the p-th powers
/// of P_n and the commutators of G's generators with P_n.
PCentralChain pcentral_series(const FiniteQuotientGroup& g);

/// The n-th term (1-based), trivial past the end of the chain.
Subgroup chain_term(const FiniteQuotientGroup& g, const PCentralChain& chain, std::size_t n);

struct UniformityLevel {
  int level = 0;
  int dim = 0;
  int next_dim = 0;
  bool bijective = false;
};

struct UniformityReport {
  int window = 0;
  bool quotient_abelian = false;  // G / G^p abelian
  std::vector<UniformityLevel> levels;
  std::vector<int> dims;
  bool uniform = false;
};

/// Checks x -> x^p : gr_n -> gr_{n+1} for n = 1..window. A quotient mod p^N
/// only reflects P_n faithfully for small n, so window must be < N - 1.
UniformityReport uniformity_check(const FiniteQuotientGroup& g, int window);

struct DictionaryBracket {
  ScalarMatrix value;
  int certified_levels = 0;
  int steps = 0;
};

/// log( [g^(p^n), h^(p^n)] ) / p^(2n) for n = steps, evaluated at working
/// precision N + 2n on the canonical lifts of g and h so the division by
/// p^(2n) lands back at precision N. The certified level count is the depth
/// of the difference between the last two iterates.
DictionaryBracket dictionary_bracket(const ScalarMatrix& g, const ScalarMatrix& h, int steps);

/// Generators (t, a_1) of <t> x| (Z/p^2)^(p-1) with t a_i t^-1 = a_{i+1} and
/// t a_{p-1} t^-1 = (a_1 ... a_{p-1})^-1, as affine p x p matrices mod p^3.
std::vector<ScalarMatrix> semidirect_example_generators(u64 p);

}  // namespace tamelab
