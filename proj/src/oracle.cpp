#include "msym/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace msym::oracle {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Monomial canonical_representative(const Monomial& x, std::size_t n, std::size_t m) {
  Monomial best = x;
  for (const auto& sigma : all_permutations(n)) {
    Monomial image = act_on_monomial(sigma, x, m);
    if (image < best) best = std::move(image);
  }
  return best;
}

NPoly orbit_sum(const Monomial& x, std::size_t n, std::size_t m, const Ring& ring) {
  std::set<Monomial> images;
  for (const auto& sigma : all_permutations(n)) images.insert(act_on_monomial(sigma, x, m));
  Polynomial p(ring, n * m);
  for (const auto& image : images) p.add_term(image, Coeff(1));
  return NPoly(n, m, std::move(p));
}

std::vector<Monomial> monomials_of_multidegree(std::size_t n, std::size_t m, const Multidegree& a) {
  // Distribute a_i among the n slots independently for each variable family.
  std::vector<std::vector<std::vector<Exponent>>> per_family(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Exponent> cur(n, 0);
    auto rec = [&](auto&& self, std::size_t j, Exponent left) -> void {
      if (j + 1 == n) {
        cur[j] = left;
        per_family[i].push_back(cur);
        return;
      }
      for (Exponent e = 0; e <= left; ++e) {
        cur[j] = e;
        self(self, j + 1, left - e);
      }
    };
    if (n > 0) rec(rec, 0, a[i]);
  }
  std::vector<Monomial> out;
  std::vector<Exponent> exps(n * m, 0);
  auto combine = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      out.emplace_back(exps);
      return;
    }
    for (const auto& dist : per_family[i]) {
      for (std::size_t j = 0; j < n; ++j) exps[j * m + i] = dist[j];
      self(self, i + 1);
    }
  };
  combine(combine, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NPoly> invariant_basis(std::size_t n, std::size_t m, const Multidegree& a, const Ring& ring) {
  std::set<Monomial> reps;
  for (const auto& x : monomials_of_multidegree(n, m, a)) reps.insert(canonical_representative(x, n, m));
  std::vector<NPoly> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.push_back(orbit_sum(r, n, m, ring));
  return out;
}

bool is_invariant(const NPoly& p) {
  for (std::size_t j = 0; j + 1 < p.n(); ++j) {
    if (!(sn_act(Permutation::transposition(p.n(), j, j + 1), p) == p)) return false;
  }
  return true;
}

bool is_invariant_exhaustive(const NPoly& p) {
  for (const auto& sigma : all_permutations(p.n())) {
    if (!(sn_act(sigma, p) == p)) return false;
  }
  return true;
}

std::vector<Coeff> orbit_coordinates(const NPoly& p, const std::vector<Monomial>& representatives) {
  std::vector<Coeff> out;
  out.reserve(representatives.size());
  for (const auto& r : representatives) out.push_back(p.poly().coefficient(r));
  return out;
}

}  // namespace msym::oracle
