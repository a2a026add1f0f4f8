#include "msym/msf.hpp"
#include "msym/oracle.hpp"
#include "msym/relations.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msym;
using msym::testing::X;

namespace {
const Ring Z = Ring::integers();
}

TEST(Oracle, OrbitSums) {
  EXPECT_EQ(oracle::orbit_sum(Monomial{1, 0}, 2, 1, Z), X(Z, 2, 1, 1, 1) + X(Z, 2, 1, 1, 2));
  EXPECT_EQ(oracle::orbit_sum(Monomial{1, 1}, 2, 1, Z), X(Z, 2, 1, 1, 1) * X(Z, 2, 1, 1, 2));
  EXPECT_EQ(oracle::orbit_sum(Monomial{1, 0, 0, 1}, 2, 2, Z),
            X(Z, 2, 2, 1, 1) * X(Z, 2, 2, 2, 2) + X(Z, 2, 2, 1, 2) * X(Z, 2, 2, 2, 1));
}

TEST(Oracle, InvariantBasis) {
  const auto b = oracle::invariant_basis(2, 2, Multidegree{1, 1}, Z);
  ASSERT_EQ(b.size(), 2u);
  const NPoly same = X(Z, 2, 2, 1, 1) * X(Z, 2, 2, 2, 1) + X(Z, 2, 2, 1, 2) * X(Z, 2, 2, 2, 2);
  const NPoly cross = X(Z, 2, 2, 1, 1) * X(Z, 2, 2, 2, 2) + X(Z, 2, 2, 1, 2) * X(Z, 2, 2, 2, 1);
  EXPECT_TRUE((b[0] == same && b[1] == cross) || (b[0] == cross && b[1] == same));
  EXPECT_EQ(oracle::monomials_of_multidegree(2, 2, Multidegree{1, 1}).size(), 4u);
  EXPECT_EQ(oracle::invariant_basis(1, 2, Multidegree{2, 1}, Z).size(), 1u);
  const auto unit = oracle::invariant_basis(3, 2, Multidegree{0, 0}, Z);
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_EQ(unit[0], NPoly::constant(Z, 3, 2, Z.one()));
}

TEST(Oracle, Invariance) {
  EXPECT_TRUE(oracle::is_invariant(expand(e_alpha(AlphaIndex::single(Monomial{1, 0}, 1), Ambient::finite(3), Z))));
  EXPECT_FALSE(oracle::is_invariant(X(Z, 2, 1, 1, 1)));
  EXPECT_TRUE(oracle::is_invariant(NPoly(Z, 2, 1)));
}

TEST(Oracle, AdjacentTranspositionsSuffice) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      // Half the samples are orbit sums, half arbitrary.
      NPoly p(Z, n, 2);
      for (int t = 0; t < 3; ++t) {
        std::vector<Exponent> e(2 * n);
        for (auto& v : e) v = static_cast<Exponent>(rng() % 2);
        const Monomial mu(e);
        p += trial % 2 ? oracle::orbit_sum(mu, n, 2, Z) : NPoly(n, 2, Polynomial::term(Z, mu, Z.one()));
      }
      EXPECT_EQ(oracle::is_invariant(p), oracle::is_invariant_exhaustive(p));
    }
  }
}

TEST(Oracle, CountMatchesAlphaEnumeration) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      for (const auto& a : multidegrees_of_total_at_most(m, 5)) {
        std::size_t count = 0;
        for (const auto& alpha : enumerate_alpha(a)) count += alpha.weight() <= n;
        EXPECT_EQ(oracle::invariant_basis(n, m, a, Z).size(), count);
      }
    }
  }
}

TEST(Oracle, OrbitCoordinates) {
  const auto reps = std::vector<Monomial>{oracle::canonical_representative(Monomial{1, 0, 0, 1}, 2, 2),
                                          oracle::canonical_representative(Monomial{1, 1, 0, 0}, 2, 2)};
  const NPoly p = oracle::orbit_sum(Monomial{0, 1, 1, 0}, 2, 2, Z).scaled(Z.embed(3)) +
                  oracle::orbit_sum(Monomial{0, 0, 1, 1}, 2, 2, Z).scaled(Z.embed(-2));
  EXPECT_EQ(oracle::orbit_coordinates(p, reps), (std::vector<Coeff>{3, -2}));
  EXPECT_EQ(oracle::all_permutations(4).size(), 24u);
  EXPECT_EQ(oracle::all_permutations(3).front(), Permutation::identity(3));
}
