#include "msym/error.hpp"
#include "msym/relations.hpp"
#include "msym/rewrite.hpp"
#include "msym/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msym;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();
const Ring F2 = Ring::prime_field(2);

Monomial y(std::initializer_list<Exponent> e) { return Monomial(e); }

GenPoly gen(const Ring& r, std::uint32_t i, std::initializer_list<Exponent> nu) { return GenPoly::symbol(r, {i, y(nu)}); }

}  // namespace

TEST(Rewrite, MixedElementReduction) {
  const MsfElement x = e_alpha(2, {{y({1, 0}), 2}, {y({0, 1}), 1}}, Ambient::finite(3), Z);
  const MonoEPoly p = reduce_to_monomial_es(x);
  EXPECT_EQ(p.to_string(), "E[2;(1,0)]*E[1;(0,1)] - E[1;(1,0)]*E[1;(1,1)] + E[1;(2,1)]");
  const GenPoly g = rewrite(x);
  EXPECT_EQ(g.to_string(), p.to_string());
  EXPECT_EQ(evaluate(g, Ambient::finite(3)), x);
}

TEST(Rewrite, BaseCaseKeepsSymbol) {
  const MsfElement x = e_alpha(AlphaIndex::single(y({2}), 2), Ambient::infinite(), Z);
  EXPECT_EQ(reduce_to_monomial_es(x).to_string(), "E[2;(2)]");
}

TEST(Rewrite, TwoDistinctArguments) {
  const MsfElement x = e_alpha(2, {{y({1, 0}), 1}, {y({0, 1}), 1}}, Ambient::finite(2), Z);
  const MonoEPoly p = reduce_to_monomial_es(x);
  EXPECT_EQ(p.to_string(), "E[1;(0,1)]*E[1;(1,0)] - E[1;(1,1)]");
  // x_1(1) x_2(2) + x_1(2) x_2(1) = (x_1(1)+x_1(2))(x_2(1)+x_2(2)) - (x_1(1)x_2(1) + x_1(2)x_2(2)).
  const auto e1 = [&](std::initializer_list<Exponent> mu) {
    return expand(e_alpha(AlphaIndex::single(y(mu), 1), Ambient::finite(2), Z));
  };
  EXPECT_EQ(expand(x), e1({1, 0}) * e1({0, 1}) - e1({1, 1}));
  EXPECT_EQ(expand(evaluate(p, Ambient::finite(2))), expand(x));
}

TEST(Rewrite, PrimitiveReduce) {
  MonoEPoly p = MonoEPoly::symbol(Z, {1, y({2})});
  EXPECT_EQ(primitive_reduce(p, Ambient::infinite()).to_string(), "E[1;(1)]^2 - 2*E[2;(1)]");
  EXPECT_EQ(primitive_reduce(p, Ambient::finite(1)).to_string(), "E[1;(1)]^2");
  // x(1)^2 = (x(1))^2 in A(1,1).
  EXPECT_EQ(evaluate(primitive_reduce(p, Ambient::finite(1)), Ambient::finite(1)),
            evaluate(p, Ambient::finite(1)));
  EXPECT_EQ(primitive_reduce(MonoEPoly::symbol(Z, {3, y({1, 2})}), Ambient::infinite()).to_string(), "E[3;(1,2)]");
}

TEST(Rewrite, SimpleRewrites) {
  EXPECT_EQ(rewrite(MsfElement(Ambient::finite(2), 2, Z)).to_string(), "0");
  EXPECT_EQ(rewrite(e_alpha(AlphaIndex::single(y({1, 1}), 2), Ambient::finite(2), Z)).to_string(), "E[2;(1,1)]");
}

TEST(Rewrite, Evaluate) {
  const GenPoly g = gen(Z, 1, {1, 0}) * gen(Z, 1, {0, 1});
  const MsfElement at1 = evaluate(g, Ambient::finite(1));
  EXPECT_EQ(at1, e_alpha(AlphaIndex::single(y({1, 1}), 1), Ambient::finite(1), Z));
  EXPECT_EQ(evaluate(gen(Z, 2, {1, 1}), Ambient::finite(3)), e_alpha(AlphaIndex::single(y({1, 1}), 2), Ambient::finite(3), Z));
  EXPECT_TRUE(evaluate(gen(Z, 3, {1, 1}), Ambient::finite(2)).is_zero());
  EXPECT_EQ(evaluate(GenPoly::constant(Z, 2, Z.embed(4)), Ambient::finite(2)).to_string(), "4");
}

TEST(Rewrite, SymbolValidation) {
  EXPECT_THROW(GenPoly::symbol(Z, {1, y({2, 2})}), std::invalid_argument);
  EXPECT_THROW(GenPoly::symbol(Z, {0, y({1, 0})}), std::invalid_argument);
  EXPECT_THROW(GenPoly::symbol(Z, {1, y({0, 0})}), std::invalid_argument);
  EXPECT_NO_THROW(MonoEPoly::symbol(Z, {1, y({2, 2})}));
  EXPECT_THROW(gen(Z, 1, {1, 0}) + gen(Z, 1, {1}), AmbientMismatch);
  EXPECT_THROW(gen(Z, 1, {1}) * gen(F2, 1, {1}), AmbientMismatch);
}

TEST(Rewrite, RoundTripRandomCombinations) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (const Ring& r : {Z, F2}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t m = 1; m <= 2; ++m) {
        const auto pool = basis_indices(n, m, 4);
        for (int trial = 0; trial < 10; ++trial) {
          MsfElement x(Ambient::finite(n), m, r);
          for (int t = 0; t < 4; ++t) x.add_term(pool[rng() % pool.size()], r.embed(coeff(rng)));
          const GenPoly g = rewrite(x);
          const MsfElement back = evaluate(g, Ambient::finite(n));
          EXPECT_EQ(back, x);
          if (!x.is_zero()) EXPECT_EQ(expand(back), expand(x));
        }
      }
    }
  }
}

TEST(Rewrite, DegreePreservationAndGenerationBound) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      Rewriter rw(Ambient::finite(n), m, Z);
      for (const auto& alpha : basis_indices(n, m, 6)) {
        const GenPoly g = rw.rewrite(e_alpha(alpha, Ambient::finite(n), Z));
        const std::uint64_t bound = std::max<std::uint64_t>(alpha.multidegree().total(), n * (m - 1));
        for (const auto& [mono, c] : g.terms()) {
          EXPECT_EQ(mono.multidegree(m), alpha.multidegree()) << alpha.to_string();
          for (const auto& [sym, power] : mono.factors()) {
            EXPECT_LE(sym.total_degree(), bound);
            EXPECT_LE(sym.order, n);
          }
        }
      }
    }
  }
}

TEST(Rewrite, InfiniteAmbientRewriteIsUnique) {
  // Freeness: rewriting the evaluation of a generator polynomial gives it back.
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const std::vector<ESymbol> symbols{{1, y({1, 0})}, {2, y({1, 0})}, {1, y({0, 1})}, {1, y({1, 1})},
                                     {1, y({2, 1})}, {3, y({0, 1})}, {2, y({1, 1})}};
  for (int trial = 0; trial < 25; ++trial) {
    GenPoly g(Z, 2);
    for (int t = 0; t < 3; ++t) {
      GenPoly term = GenPoly::constant(Z, 2, Z.embed(coeff(rng)));
      for (int f = 0; f < 2; ++f) term = term * GenPoly::symbol(Z, symbols[rng() % symbols.size()]);
      g += term;
    }
    EXPECT_EQ(rewrite(evaluate(g, Ambient::infinite())), g) << g.to_string();
  }
}

TEST(Rewrite, NewtonToOrderOneSymbols) {
  const GenPoly e2 = gen(Q, 2, {1});
  const MonoEPoly p = to_e1_symbols(e2);
  EXPECT_EQ(p.to_string(), "1/2*E[1;(1)]^2 - 1/2*E[1;(2)]");
  EXPECT_EQ(evaluate(p, Ambient::infinite()), evaluate(e2, Ambient::infinite()));
  const GenPoly mixed = gen(Q, 3, {1, 1}) * gen(Q, 1, {1, 0}) + gen(Q, 2, {0, 1}).scaled(Q.embed(5));
  EXPECT_EQ(evaluate(to_e1_symbols(mixed), Ambient::infinite()), evaluate(mixed, Ambient::infinite()));
  EXPECT_THROW(to_e1_symbols(gen(Z, 2, {1})), std::invalid_argument);
}

TEST(Rewrite, FreenessCount) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& a : multidegrees_of_total_at_most(m, 6)) {
      EXPECT_EQ(count_generator_monomials(a), enumerate_alpha(a).size()) << a.to_string();
    }
  }
}
