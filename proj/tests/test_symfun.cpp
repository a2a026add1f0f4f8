#include "msym/symfun.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace msym;

namespace {

const Ring Z = Ring::integers();

Polynomial power_sum(std::uint32_t k, std::size_t nvars) {
  Polynomial p(Z, nvars);
  for (std::size_t i = 0; i < nvars; ++i) p.add_term(Monomial::variable(nvars, i, k), Z.one());
  return p;
}

// Evaluates a concrete polynomial at an integer point.
mpz_class at(const Polynomial& p, const std::vector<long>& point) {
  mpz_class total = 0;
  for (const auto& [mono, c] : p.terms()) {
    mpz_class term = c.get_num();
    for (std::size_t i = 0; i < point.size(); ++i) {
      mpz_class f;
      mpz_pow_ui(f.get_mpz_t(), mpz_class(point[i]).get_mpz_t(), mono[i]);
      term *= f;
    }
    total += term;
  }
  return total;
}

// e_j(x) at a point, by direct expansion of prod (1 + t x_i).
std::vector<mpz_class> elementary_values(const std::vector<long>& point) {
  std::vector<mpz_class> e(point.size() + 1, 0);
  e[0] = 1;
  for (long x : point) {
    for (std::size_t j = point.size(); j >= 1; --j) e[j] += e[j - 1] * x;
  }
  return e;
}

mpz_class eval_epoly(const EPoly& p, const std::vector<mpz_class>& e) {
  return evaluate<mpz_class>(
      p, [&](std::uint32_t i) { return i < e.size() ? e[i] : mpz_class(0); }, [](const mpz_class& c) { return c; });
}

}  // namespace

TEST(Symfun, NewtonSmall) {
  EXPECT_EQ(newton_p(1).to_string(), "e1");
  EXPECT_EQ(newton_p(2).to_string(), "e1^2 - 2*e2");
  EXPECT_EQ(newton_p(3).to_string(), "e1^3 - 3*e1*e2 + 3*e3");
  EXPECT_THROW(newton_p(0), std::invalid_argument);
  for (std::uint32_t k = 1; k <= 6; ++k) EXPECT_EQ(to_concrete(newton_p(k), k, Z), power_sum(k, k));
}

TEST(Symfun, ToEBasisExamples) {
  EXPECT_EQ(to_e_basis(elementary_polynomial(2, 3, Z)), EPoly::generator(2));
  const Polynomial x1 = Polynomial::variable(Z, 2, 0), x2 = Polynomial::variable(Z, 2, 1);
  EXPECT_EQ(to_e_basis((x1 + x2).pow(2)).to_string(), "e1^2");
  EXPECT_EQ(to_e_basis(x1 * x1 + x2 * x2).to_string(), "e1^2 - 2*e2");
  EXPECT_EQ(to_e_basis(Polynomial::constant(Z, 2, Z.embed(7))).to_string(), "7");
}

TEST(Symfun, ToEBasisErrors) {
  const Polynomial x1 = Polynomial::variable(Z, 2, 0), x2 = Polynomial::variable(Z, 2, 1);
  EXPECT_THROW(to_e_basis(x1), std::invalid_argument);
  EXPECT_THROW(to_e_basis((x1 + x2).pow(3)), std::invalid_argument);
  EXPECT_THROW(to_e_basis(elementary_polynomial(1, 2, Ring::rationals())), std::invalid_argument);
}

TEST(Symfun, ToEBasisRoundTrip) {
  // Random symmetric inputs built as polynomials in concrete e's.
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Polynomial s(Z, n);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          if (i + j > n) continue;
          s += (elementary_polynomial(i, n, Z) * elementary_polynomial(j, n, Z)).scaled(Z.embed(coeff(rng)));
        }
        s += power_sum(static_cast<std::uint32_t>(i), n).scaled(Z.embed(coeff(rng)));
      }
      EXPECT_EQ(to_concrete(to_e_basis(s), n, Z), s);
    }
  }
}

TEST(Symfun, PlethysmBasics) {
  EXPECT_EQ(plethysm_P(0, 3), EPoly::constant(1));
  for (std::uint32_t h = 1; h <= 5; ++h) EXPECT_EQ(plethysm_P(h, 1), EPoly::generator(h));
  for (std::uint32_t k = 1; k <= 8; ++k) EXPECT_EQ(plethysm_P(1, k), newton_p(k));
}

TEST(Symfun, PlethysmTwoTwoAtRandomPoints) {
  const EPoly p22 = plethysm_P(2, 2);
  EXPECT_EQ(p22.to_string(), "-2*e1*e3 + e2^2 + 2*e4");
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (std::size_t n : {4, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> point(n);
      for (auto& v : point) v = dist(rng);
      mpz_class direct = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) direct += mpz_class(point[i] * point[i]) * (point[j] * point[j]);
      EXPECT_EQ(eval_epoly(p22, elementary_values(point)), direct);
    }
  }
}

TEST(Symfun, PlethysmMatchesSubstitutionAtRandomPoints) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (std::uint32_t h = 1; h <= 4; ++h) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const EPoly p = plethysm_P(h, k);
      EXPECT_TRUE(p.is_homogeneous(std::uint64_t{h} * k)) << h << "," << k;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<long> point(h * k + 1);
        for (auto& v : point) v = dist(rng);
        std::vector<long> powered(point.size());
        for (std::size_t i = 0; i < point.size(); ++i) {
          mpz_class v;
          mpz_pow_ui(v.get_mpz_t(), mpz_class(point[i]).get_mpz_t(), k);
          powered[i] = v.get_si();
        }
        EXPECT_EQ(eval_epoly(p, elementary_values(point)), elementary_values(powered)[h]);
      }
    }
  }
}

TEST(Symfun, EPolyArithmetic) {
  const EPoly e1 = EPoly::generator(1), e2 = EPoly::generator(2);
  EXPECT_EQ((e1 * e1 * e2 - e2.scaled(3)).to_string(), "e1^2*e2 - 3*e2");
  EXPECT_TRUE((e1 - e1).is_zero());
  EXPECT_EQ(EMonomial::generator(2, 3).weight(), 6u);
  const EPoly mixed = e1 * e1 + e2 + e1;
  EXPECT_FALSE(mixed.is_homogeneous(2));
  EXPECT_EQ(mixed.homogeneous_component(2), e1 * e1 + e2);
}

TEST(Symfun, ElementaryPolynomial) {
  EXPECT_EQ(elementary_polynomial(2, 3, Z).size(), 3u);
  EXPECT_EQ(elementary_polynomial(0, 3, Z), Polynomial::constant(Z, 3, Z.one()));
  EXPECT_TRUE(elementary_polynomial(4, 3, Z).is_zero());
}
