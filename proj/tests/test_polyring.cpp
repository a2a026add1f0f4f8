#include "msym/error.hpp"
#include "msym/oracle.hpp"
#include "msym/polynomial.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msym;
using msym::testing::X;
using msym::testing::Y;

namespace {

const Ring Z = Ring::integers();

NPoly random_npoly(std::mt19937_64& rng, const Ring& r, std::size_t n, std::size_t m, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3), var_i(1, static_cast<int>(m)), slot(1, static_cast<int>(n)),
      len(0, 3);
  NPoly p(r, n, m);
  for (int t = 0; t < terms; ++t) {
    NPoly term = NPoly::constant(r, n, m, r.embed(coeff(rng)));
    for (int f = len(rng); f > 0; --f) term *= X(r, n, m, var_i(rng), slot(rng));
    p += term;
  }
  return p;
}

}  // namespace

TEST(PolyRing, SubstSlot) {
  const MPoly f = Y(Z, 2, 1) * Y(Z, 2, 2);
  EXPECT_EQ(subst_slot(f, 3, 3), X(Z, 3, 2, 1, 3) * X(Z, 3, 2, 2, 3));
  EXPECT_EQ(subst_slot(Y(Z, 2, 1) + Y(Z, 2, 2), 1, 2), X(Z, 2, 2, 1, 1) + X(Z, 2, 2, 2, 1));
  EXPECT_EQ(subst_slot(MPoly::constant(Z, 2, Z.one()), 2, 2), NPoly::constant(Z, 2, 2, Z.one()));
  EXPECT_THROW(subst_slot(f, 0, 3), std::invalid_argument);
  EXPECT_THROW(subst_slot(f, 4, 3), std::invalid_argument);
}

TEST(PolyRing, SnAct) {
  const Permutation swap = Permutation::from_one_based({2, 1});
  EXPECT_EQ(sn_act(swap, X(Z, 2, 1, 1, 1)), X(Z, 2, 1, 1, 2));
  const NPoly p = X(Z, 2, 2, 1, 1) * X(Z, 2, 2, 2, 2) + X(Z, 2, 2, 2, 1);
  EXPECT_EQ(sn_act(Permutation::identity(2), p), p);
  const NPoly sym = X(Z, 2, 1, 1, 1) * X(Z, 2, 1, 1, 2);
  EXPECT_EQ(sn_act(swap, sym), sym);
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 2}), std::invalid_argument);
}

TEST(PolyRing, Arithmetic) {
  EXPECT_EQ((X(Z, 2, 1, 1, 1) * X(Z, 2, 1, 1, 2)).to_string(), "x1(1)*x1(2)");
  const NPoly p = X(Z, 2, 2, 1, 1) + X(Z, 2, 2, 2, 2).scaled(Z.embed(3));
  EXPECT_TRUE((p + p.scaled(Z.embed(-1))).is_zero());
  const Ring f2 = Ring::prime_field(2);
  const NPoly q = X(f2, 2, 2, 1, 1) + X(f2, 2, 2, 2, 2);
  EXPECT_TRUE((q + q).is_zero());
  EXPECT_THROW(X(Z, 2, 2, 1, 1) + X(Z, 3, 2, 1, 1), AmbientMismatch);
  EXPECT_THROW(X(Z, 2, 2, 1, 1) * X(f2, 2, 2, 1, 1), AmbientMismatch);
}

TEST(PolyRing, MultidegreeComponent) {
  const NPoly p = X(Z, 1, 2, 1, 1) + X(Z, 1, 2, 2, 1);
  EXPECT_EQ(multidegree_component(p, Multidegree{1, 0}), X(Z, 1, 2, 1, 1));
  EXPECT_TRUE(multidegree_component(p, Multidegree{2, 0}).is_zero());
  const NPoly q = X(Z, 2, 2, 1, 1) * X(Z, 2, 2, 2, 2);
  EXPECT_EQ(multidegree_component(q, Multidegree{1, 1}), q);
}

TEST(PolyRing, TextFormAndParser) {
  const NPoly p = X(Z, 2, 2, 1, 1) * X(Z, 2, 2, 2, 2) + X(Z, 2, 2, 1, 2) * X(Z, 2, 2, 2, 1);
  EXPECT_EQ(p.to_string(), "x1(1)*x2(2) + x1(2)*x2(1)");
  EXPECT_EQ(parse_npoly(p.to_string(), Z, 2, 2), p);
  const NPoly q = parse_npoly("3*x1(1)^2 - x2(2) + 5", Z, 2, 2);
  EXPECT_EQ(parse_npoly(q.to_string(), Z, 2, 2), q);
  EXPECT_EQ(q.poly().constant_term(), Coeff(5));
  EXPECT_THROW(parse_npoly("x3(1)", Z, 2, 2), ParseError);
  EXPECT_THROW(parse_npoly("x1(1) +", Z, 2, 2), ParseError);
  EXPECT_EQ(NPoly(Z, 2, 2).to_string(), "0");
}

TEST(PolyRing, SnActIsRingHomomorphismAndComposes) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (int trial = 0; trial < 10; ++trial) {
      const NPoly p = random_npoly(rng, Z, n, 2, 4), q = random_npoly(rng, Z, n, 2, 4);
      for (std::size_t s = 0; s < perms.size(); s += 5) {
        const Permutation& sigma = perms[s];
        const Permutation& tau = perms[(s * 7 + 3) % perms.size()];
        EXPECT_EQ(sn_act(sigma, p * q), sn_act(sigma, p) * sn_act(sigma, q));
        EXPECT_EQ(sn_act(sigma, p + q), sn_act(sigma, p) + sn_act(sigma, q));
        EXPECT_EQ(sn_act(sigma * tau, p), sn_act(sigma, sn_act(tau, p)));
        for (std::uint32_t a1 = 0; a1 <= 3; ++a1) {
          const Multidegree a{a1, 3 - a1};
          EXPECT_EQ(multidegree_component(sn_act(sigma, p), a), sn_act(sigma, multidegree_component(p, a)));
        }
      }
    }
  }
}

TEST(PolyRing, SubstSlotCommutesWithAction) {
  // sigma(f(j)) = f(sigma(j)), and f -> f(j) is a ring map.
  const MPoly f = Y(Z, 2, 1) * Y(Z, 2, 1) + Y(Z, 2, 2).scaled(Z.embed(-2));
  const MPoly g = Y(Z, 2, 2) + MPoly::constant(Z, 2, Z.embed(3));
  for (const auto& sigma : oracle::all_permutations(3)) {
    for (std::size_t j = 1; j <= 3; ++j) {
      EXPECT_EQ(sn_act(sigma, subst_slot(f, j, 3)), subst_slot(f, sigma(j - 1) + 1, 3));
      EXPECT_EQ(subst_slot(f * g, j, 3), subst_slot(f, j, 3) * subst_slot(g, j, 3));
      EXPECT_EQ(subst_slot(f + g, j, 3), subst_slot(f, j, 3) + subst_slot(g, j, 3));
    }
  }
}

TEST(PolyRing, SummingComponentsRecoversPolynomial) {
  std::mt19937_64 rng(3);
  const NPoly p = random_npoly(rng, Z, 3, 2, 8);
  NPoly sum(Z, 3, 2);
  for (std::uint32_t a1 = 0; a1 <= 3; ++a1) {
    for (std::uint32_t a2 = 0; a2 <= 3; ++a2) sum += multidegree_component(p, Multidegree{a1, a2});
  }
  EXPECT_EQ(sum, p);
}
