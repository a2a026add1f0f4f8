#pragma once

#include "msym/monomial.hpp"
#include "msym/polynomial.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace msym {

/// A product e_1^{d_1} e_2^{d_2} ... ; no trailing zero exponents.
class EMonomial {
 public:
  EMonomial() = default;
  explicit EMonomial(std::vector<Exponent> powers);
  static EMonomial generator(std::uint32_t i, Exponent power = 1);

  /// Power of e_i (1-based).
  Exponent power(std::uint32_t i) const { return i >= 1 && i <= powers_.size() ? powers_[i - 1] : 0; }
  std::uint32_t max_index() const { return static_cast<std::uint32_t>(powers_.size()); }
  /// Degree under deg(e_i) = i.
  std::uint64_t weight() const;
  bool is_one() const { return powers_.empty(); }
  EMonomial operator*(const EMonomial& other) const;

  friend bool operator==(const EMonomial&, const EMonomial&) = default;
  /// Weighted degree, then lexicographic on (d_1, d_2, ...).
  friend std::strong_ordering operator<=>(const EMonomial& a, const EMonomial& b);

  std::string to_string() const;

 private:
  std::vector<Exponent> powers_;
};

/// Polynomial over Z in the elementary symmetric functions e_1, e_2, ...
class EPoly {
 public:
  using TermMap = std::map<EMonomial, mpz_class>;

  EPoly() = default;
  static EPoly constant(const mpz_class& c);
  static EPoly generator(std::uint32_t i);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const EMonomial& mono, const mpz_class& c);
  mpz_class coefficient(const EMonomial& mono) const;

  /// True when every term has weighted degree d.
  bool is_homogeneous(std::uint64_t d) const;
  EPoly homogeneous_component(std::uint64_t d) const;

  EPoly& operator+=(const EPoly& other);
  EPoly& operator-=(const EPoly& other);
  EPoly scaled(const mpz_class& c) const;
  friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
  friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
  friend EPoly operator*(const EPoly& a, const EPoly& b);
  friend bool operator==(const EPoly&, const EPoly&) = default;

  /// "e1^2*e2 - 3*e4", leading term first.
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Substitutes e_i -> generator(i) and integer scalars -> embed(c), then
/// multiplies out in T.
template <class T, class Gen, class Embed>
T evaluate(const EPoly& p, Gen&& generator, Embed&& embed) {
  T total = embed(mpz_class(0));
  std::map<std::uint32_t, std::vector<T>> powers;  // powers[i][k] = generator(i)^k
  auto power_of = [&](std::uint32_t i, Exponent k) -> const T& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(embed(mpz_class(1)));
    while (cache.size() <= k) {
      T next = cache.back() * generator(i);
      cache.push_back(std::move(next));
    }
    return cache[k];
  };
  for (const auto& [mono, c] : p.terms()) {
    T term = embed(c);
    for (std::uint32_t i = 1; i <= mono.max_index(); ++i) {
      if (mono.power(i) > 0) term = term * power_of(i, mono.power(i));
    }
    total = total + term;
  }
  return total;
}

/// e_k in `nvars` variables as a concrete polynomial.
Polynomial elementary_polynomial(std::uint32_t k, std::size_t nvars, const Ring& ring);

/// Power sum p_k in the e-basis via Newton's identities. Throws on k = 0.
EPoly newton_p(std::uint32_t k);

/// Rewrites a symmetric polynomial over Z in N variables into the e-basis by
/// repeated leading-term elimination. Throws std::invalid_argument when the
/// input is not symmetric, not over Z, or of degree > N.
EPoly to_e_basis(const Polynomial& s);

/// P_{h,k} = e_h(x_1^k, x_2^k, ...) in the e-basis; memoized.
EPoly plethysm_P(std::uint32_t h, std::uint32_t k);

/// Substitutes e_i -> concrete e_i in `nvars` variables.
Polynomial to_concrete(const EPoly& p, std::size_t nvars, const Ring& ring);

}  // namespace msym
