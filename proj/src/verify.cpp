#include "msym/verify.hpp"

#include "msym/linalg.hpp"
#include "msym/oracle.hpp"
#include "msym/relations.hpp"
#include "msym/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace msym {

bool VerifyReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass; });
}

namespace {

void fail(PropertyResult& r, const std::string& what) {
  if (r.pass) r.first_failure = what;
  r.pass = false;
}

}  // namespace

std::vector<AlphaIndex> basis_indices(std::size_t n, std::size_t m, std::uint64_t max_total) {
  std::vector<AlphaIndex> out;
  for (const auto& a : multidegrees_of_total_at_most(m, max_total)) {
    for (auto& alpha : enumerate_alpha(a)) {
      if (alpha.weight() <= n) out.push_back(std::move(alpha));
    }
  }
  return out;
}

PropertyResult check_basis(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring) {
  PropertyResult r{"basis_rank", true, 0, {}};
  for (const auto& a : multidegrees_of_total_at_most(m, max_total)) {
    std::vector<NPoly> expansions;
    for (const auto& alpha : enumerate_alpha(a)) {
      if (alpha.weight() <= n) expansions.push_back(expand_basis(alpha, n, ring));
    }
    const auto orbits = oracle::invariant_basis(n, m, a, ring);
    ++r.checked;
    if (expansions.size() != orbits.size()) {
      fail(r, "count mismatch at " + a.to_string());
      continue;
    }
    // Each e_alpha must expand to exactly one oracle orbit sum.
    std::set<std::string> lhs, rhs;
    for (const auto& p : expansions) lhs.insert(p.to_string());
    for (const auto& p : orbits) rhs.insert(p.to_string());
    if (lhs != rhs) fail(r, "expansions differ from orbit sums at " + a.to_string());
    if (ring.is_field() && linalg::rank(linalg::coefficient_rows(expansions), ring) != expansions.size()) {
      fail(r, "rank deficient at " + a.to_string());
    }
  }
  return r;
}

PropertyResult check_homomorphism(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring) {
  PropertyResult r{"homomorphism", true, 0, {}};
  const auto basis = basis_indices(n, m, max_total);
  const Ambient amb = Ambient::finite(n);
  std::vector<NPoly> expansions;
  for (const auto& alpha : basis) expansions.push_back(expand_basis(alpha, n, ring));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      if (basis[i].multidegree().total() + basis[j].multidegree().total() > max_total) continue;
      const MsfElement prod = product(e_alpha(basis[i], amb, ring), e_alpha(basis[j], amb, ring));
      ++r.checked;
      if (!(expand(prod) == expansions[i] * expansions[j])) {
        fail(r, basis[i].to_string() + " * " + basis[j].to_string());
      }
    }
  }
  return r;
}

PropertyResult check_round_trip(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring) {
  PropertyResult r{"round_trip", true, 0, {}};
  const Ambient amb = Ambient::finite(n);
  Rewriter rewriter(amb, m, ring);
  for (const auto& alpha : basis_indices(n, m, max_total)) {
    const MsfElement x = e_alpha(alpha, amb, ring);
    ++r.checked;
    if (!(evaluate(rewriter.rewrite(x), amb) == x)) fail(r, alpha.to_string());
  }
  return r;
}

PropertyResult check_relation_vanishing(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring) {
  PropertyResult r{"relation_vanishing", true, 0, {}};
  Rewriter rewriter(Ambient::infinite(), m, ring);
  for (const auto& a : multidegrees_of_total_at_most(m, max_total)) {
    for (const auto& rel : relations_in_multidegree(n, a, rewriter)) {
      ++r.checked;
      if (rel.poly.is_zero()) fail(r, "zero relation for " + rel.alpha.to_string());
      if (!relation_vanishes(rel.poly, n)) fail(r, rel.alpha.to_string());
    }
  }
  return r;
}

PropertyResult check_freeness_count(std::size_t m, std::uint64_t max_total) {
  PropertyResult r{"freeness_count", true, 0, {}};
  for (const auto& a : multidegrees_of_total_at_most(m, max_total)) {
    ++r.checked;
    if (count_generator_monomials(a) != enumerate_alpha(a).size()) fail(r, a.to_string());
  }
  return r;
}

VerifyReport verify(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring) {
  if (n < 1 || n > VerifyBounds::max_n || m < 1 || m > VerifyBounds::max_m ||
      max_total > VerifyBounds::max_total_degree) {
    throw std::invalid_argument("verify is limited to 1 <= n <= " + std::to_string(VerifyBounds::max_n) +
                                ", 1 <= m <= " + std::to_string(VerifyBounds::max_m) + ", total degree <= " +
                                std::to_string(VerifyBounds::max_total_degree));
  }
  VerifyReport report{n, m, max_total, ring, {}};
  report.properties.push_back(check_basis(n, m, max_total, ring));
  report.properties.push_back(check_homomorphism(n, m, max_total, ring));
  report.properties.push_back(check_round_trip(n, m, max_total, ring));
  report.properties.push_back(check_relation_vanishing(n, m, max_total, ring));
  report.properties.push_back(check_freeness_count(m, max_total));
  return report;
}

}  // namespace msym
