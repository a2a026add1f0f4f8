#pragma once

#include "msym/msf.hpp"
#include "msym/polynomial.hpp"

#include <vector>

namespace msym::testing {

inline NPoly X(const Ring& r, std::size_t n, std::size_t m, std::size_t i, std::size_t j) {
  return NPoly::variable(r, n, m, i, j);
}

inline MPoly Y(const Ring& r, std::size_t m, std::size_t i) { return Polynomial::variable(r, m, i - 1); }

/// Orbit-sum expansion by brute force: every map phi from slots to {0 = unit, 1..k}
/// whose fibre sizes equal the multiplicities.
inline NPoly brute_expand(const AlphaIndex& alpha, std::size_t n, const Ring& ring) {
  const auto support = alpha.support();
  const std::size_t k = support.size();
  NPoly total(ring, n, alpha.m());
  std::vector<std::size_t> phi(n, 0);
  while (true) {
    std::vector<std::uint32_t> count(k + 1, 0);
    for (auto v : phi) ++count[v];
    bool match = true;
    for (std::size_t s = 0; s < k; ++s) match = match && count[s + 1] == support[s].mult;
    if (match) {
      NPoly term = NPoly::constant(ring, n, alpha.m(), ring.one());
      for (std::size_t j = 0; j < n; ++j) {
        if (phi[j] != 0) term *= subst_slot(Polynomial::term(ring, support[phi[j] - 1].mono, ring.one()), j + 1, n);
      }
      total += term;
    }
    std::size_t pos = 0;
    while (pos < n && ++phi[pos] > k) phi[pos++] = 0;
    if (pos == n) break;
  }
  return total;
}

/// Coefficient of t^k in prod_j (1 + t f(j)) inside A(n,m).
inline NPoly generating_coefficient(const MPoly& f, std::uint32_t k, std::size_t n, std::size_t m) {
  const Ring& ring = f.ring();
  std::vector<NPoly> series(k + 1, NPoly(ring, n, m));
  series[0] = NPoly::constant(ring, n, m, ring.one());
  for (std::size_t j = 1; j <= n; ++j) {
    const NPoly fj = subst_slot(f, j, n);
    for (std::size_t d = k; d >= 1; --d) series[d] += series[d - 1] * fj;
  }
  return series[k];
}

}  // namespace msym::testing
