#include "msym/relations.hpp"

#include "msym/linalg.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <stdexcept>

namespace msym {

std::vector<Multidegree> multidegrees_up_to(const Multidegree& bound) {
  std::vector<Exponent> b(bound.entries().begin(), bound.entries().end());
  std::vector<Multidegree> out;
  for (const auto& mu : monomials_dividing(Monomial(b))) out.push_back(mu.multidegree());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multidegree> multidegrees_of_total_at_most(std::size_t m, std::uint64_t max_total) {
  std::vector<Multidegree> out;
  for (const auto& mu : monomials_up_to(m, max_total)) out.push_back(mu.multidegree());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlphaIndex> kernel_basis(std::size_t n, std::size_t m, const Multidegree& a) {
  if (a.size() != m) throw std::invalid_argument("multidegree length differs from m");
  std::vector<AlphaIndex> out;
  if (a.total() <= n) return out;
  for (auto& alpha : enumerate_alpha(a)) {
    if (alpha.weight() > n) out.push_back(std::move(alpha));
  }
  return out;
}

std::vector<Relation> relations_in_multidegree(std::size_t n, const Multidegree& a, Rewriter& rewriter) {
  if (rewriter.ambient().is_finite()) throw std::invalid_argument("relations are rewritten in the infinite ambient");
  std::vector<Relation> out;
  for (const auto& alpha : kernel_basis(n, a.size(), a)) {
    GenPoly g = rewriter.rewrite(e_alpha(alpha, Ambient::infinite(), rewriter.ring()));
    out.push_back({a, alpha, std::move(g)});
  }
  return out;
}

std::vector<Relation> relation_polys(std::size_t n, std::size_t m, const Multidegree& max_a, const Ring& ring) {
  if (max_a.size() != m) throw std::invalid_argument("multidegree bound length differs from m");
  Rewriter rewriter(Ambient::infinite(), m, ring);
  std::vector<Relation> out;
  for (const auto& a : multidegrees_up_to(max_a)) {
    auto rels = relations_in_multidegree(n, a, rewriter);
    std::move(rels.begin(), rels.end(), std::back_inserter(out));
  }
  return out;
}

bool relation_vanishes(const GenPoly& relation, std::size_t n) {
  const MsfElement value = evaluate(relation, Ambient::finite(n));
  if (!value.is_zero()) return false;
  // Independent route: multiply the generator expansions in A(n,m) directly.
  const Ring& ring = relation.ring();
  const std::size_t m = relation.m();
  NPoly total(ring, n, m);
  for (const auto& [mono, c] : relation.terms()) {
    NPoly term = NPoly::constant(ring, n, m, c);
    for (const auto& [sym, p] : mono.factors()) {
      const NPoly factor = expand_basis(AlphaIndex::single(sym.mono, sym.order), n, ring);
      for (Exponent i = 0; i < p; ++i) term *= factor;
    }
    total += term;
  }
  return total.is_zero();
}

std::vector<IdealGenerator> char_zero_ideal_gens(std::size_t n, std::size_t m, std::uint64_t degree_bound,
                                                 const Ring& ring) {
  if (ring.kind() != RingKind::Rationals) throw std::invalid_argument("ideal generators need the rationals");
  std::vector<IdealGenerator> out;
  const std::uint64_t max_mono_degree = degree_bound / (n + 1);
  if (max_mono_degree == 0) return out;
  const auto monos = monomials_up_to(m, max_mono_degree);

  Rewriter rewriter(Ambient::infinite(), m, ring);
  std::vector<Monomial> chosen;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (!chosen.empty()) {
      MPoly f(ring, m);
      for (const auto& mu : chosen) f.add_term(mu, Coeff(1));
      MsfElement e = ek_of_f(f, static_cast<std::uint32_t>(n + 1), Ambient::infinite());
      MonoEPoly poly = to_e1_symbols(rewriter.rewrite(e));
      out.push_back({chosen, std::move(e), std::move(poly)});
    }
    if (chosen.size() == n + 1) return;
    for (std::size_t i = idx; i < monos.size(); ++i) {
      chosen.push_back(monos[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

CoverageReport kernel_coverage(std::size_t n, std::size_t m, const Multidegree& a, std::uint64_t seed) {
  const auto kernel = kernel_basis(n, m, a);
  CoverageReport report{kernel.size(), 0, 0};
  if (kernel.empty()) return report;

  const Ring q = Ring::rationals();
  std::vector<Exponent> bound(a.entries().begin(), a.entries().end());
  const auto monos = monomials_dividing(Monomial(bound));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-9, 9);

  // Coordinates are taken against the full alpha list of multidegree a.
  const auto all_alpha = enumerate_alpha(a);
  linalg::Matrix rows;
  const std::size_t per_k = kernel.size() + 2;
  for (std::uint32_t k = static_cast<std::uint32_t>(n + 1); k <= a.total(); ++k) {
    for (std::size_t s = 0; s < per_k; ++s) {
      MPoly f(q, m);
      for (const auto& mu : monos) {
        long v = 0;
        while (v == 0) v = dist(rng);
        f.add_term(mu, Coeff(v));
      }
      const MsfElement e = ek_of_f_part(f, k, Ambient::infinite(), a);
      std::vector<Coeff> row;
      row.reserve(all_alpha.size());
      for (const auto& alpha : all_alpha) row.push_back(e.coefficient(alpha));
      rows.push_back(std::move(row));
    }
  }
  report.samples = rows.size();
  report.span_rank = linalg::rank(std::move(rows), q);
  return report;
}

}  // namespace msym
