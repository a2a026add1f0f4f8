#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/monomial.hpp"
#include "msym/polynomial.hpp"

#include <cstddef>
#include <vector>

/// Ground truth computed directly from the S_n action on A_R(n,m). Nothing
/// here depends on the e_alpha machinery.
namespace msym::oracle {

/// Every element of S_n, identity first.
std::vector<Permutation> all_permutations(std::size_t n);

/// The minimal image of a flattened monomial under S_n.
Monomial canonical_representative(const Monomial& x, std::size_t n, std::size_t m);

/// Sum of the distinct images of x under S_n, each counted once.
NPoly orbit_sum(const Monomial& x, std::size_t n, std::size_t m, const Ring& ring);

/// Every monomial of A(n,m) with slot multidegree a, in canonical order.
std::vector<Monomial> monomials_of_multidegree(std::size_t n, std::size_t m, const Multidegree& a);

/// One orbit sum per S_n-orbit of monomials of multidegree a, ordered by the
/// canonical representative.
std::vector<NPoly> invariant_basis(std::size_t n, std::size_t m, const Multidegree& a, const Ring& ring);

/// Invariance under the adjacent transpositions (which generate S_n).
bool is_invariant(const NPoly& p);
/// Invariance under every element of S_n.
bool is_invariant_exhaustive(const NPoly& p);

/// Coordinates of an invariant polynomial in the orbit-sum basis: the
/// coefficient of each canonical representative.
std::vector<Coeff> orbit_coordinates(const NPoly& p, const std::vector<Monomial>& representatives);

}  // namespace msym::oracle
