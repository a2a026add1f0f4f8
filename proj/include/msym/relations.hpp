#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/monomial.hpp"
#include "msym/msf.hpp"
#include "msym/rewrite.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace msym {

/// Every nonzero multidegree componentwise <= bound, in canonical order.
std::vector<Multidegree> multidegrees_up_to(const Multidegree& bound);
/// Every nonzero multidegree in m variables with total <= max_total.
std::vector<Multidegree> multidegrees_of_total_at_most(std::size_t m, std::uint64_t max_total);

/// The alpha of multidegree a with weight > n: a basis of the kernel of
/// A(infinity,m,a) -> A(n,m,a)^{S_n}.
std::vector<AlphaIndex> kernel_basis(std::size_t n, std::size_t m, const Multidegree& a);

/// A relation among the generators: e_alpha with |alpha| > n rewritten in the
/// infinite ambient.
struct Relation {
  Multidegree multidegree;
  AlphaIndex alpha;
  GenPoly poly;
};

/// Relations of one multidegree. `rewriter` must be for the infinite ambient.
std::vector<Relation> relations_in_multidegree(std::size_t n, const Multidegree& a, Rewriter& rewriter);

/// One relation per kernel basis element, for every multidegree up to max_a,
/// ordered by (multidegree, alpha).
std::vector<Relation> relation_polys(std::size_t n, std::size_t m, const Multidegree& max_a, const Ring& ring);

/// Evaluates at ambient n and also expands into A(n,m); true iff both vanish.
bool relation_vanishes(const GenPoly& relation, std::size_t n);

/// e_{n+1}(f) for f = sum of the monomials of S, over all nonempty S of at most
/// n+1 monomials whose largest degree keeps (n+1) * deg within degree_bound,
/// written in order-1 symbols e_1(mu). Requires the rationals.
struct IdealGenerator {
  std::vector<Monomial> f_support;
  MsfElement element;
  MonoEPoly poly;
};
std::vector<IdealGenerator> char_zero_ideal_gens(std::size_t n, std::size_t m, std::uint64_t degree_bound,
                                                 const Ring& ring);

/// Rank over Q of the multidegree-a parts of e_k(f), k = n+1..|a|, for
/// generic integer f supported on the monomials dividing a, against the size
/// of kernel_basis(n, m, a).
struct CoverageReport {
  std::size_t kernel_rank;
  std::size_t span_rank;
  std::size_t samples;
};
CoverageReport kernel_coverage(std::size_t n, std::size_t m, const Multidegree& a, std::uint64_t seed = 20070101);

}  // namespace msym
