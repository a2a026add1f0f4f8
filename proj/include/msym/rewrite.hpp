#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/monomial.hpp"
#include "msym/msf.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace msym {

/// The symbol e_order(mono).
struct ESymbol {
  std::uint32_t order;
  Monomial mono;

  Multidegree multidegree() const { return mono.multidegree().scaled(order); }
  std::uint64_t total_degree() const { return mono.total_degree() * order; }
  /// "E[2;(1,0)]"
  std::string to_string() const;

  friend bool operator==(const ESymbol&, const ESymbol&) = default;
  /// Higher order first, then ascending monomial.
  friend std::strong_ordering operator<=>(const ESymbol& a, const ESymbol& b);
};

/// A commutative monomial in ESymbols.
class SymbolMonomial {
 public:
  SymbolMonomial() = default;
  explicit SymbolMonomial(const ESymbol& s, Exponent power = 1);

  const std::vector<std::pair<ESymbol, Exponent>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t total_degree() const { return total_degree_; }
  /// Multidegree in m variables (zero vector for the empty monomial).
  Multidegree multidegree(std::size_t m) const;

  SymbolMonomial operator*(const SymbolMonomial& other) const;

  friend bool operator==(const SymbolMonomial& a, const SymbolMonomial& b) { return a.factors_ == b.factors_; }
  /// Larger total degree first, then more factors, then lexicographic on the
  /// factor sequence.
  friend std::strong_ordering operator<=>(const SymbolMonomial& a, const SymbolMonomial& b);

  std::string to_string() const;

 private:
  std::vector<std::pair<ESymbol, Exponent>> factors_;
  std::uint64_t total_degree_ = 0;
};

/// Symbols e_i(mu) with arbitrary mu in M_m^+.
struct AnyMonomialSymbols {
  static constexpr bool primitive_only = false;
};
/// Symbols e_{i,nu} with nu primitive: the free generators of C(m).
struct PrimitiveSymbols {
  static constexpr bool primitive_only = true;
};

/// Polynomial over a Ring in symbols e_i(mu). With PrimitiveSymbols every
/// symbol is validated to have a primitive monomial.
template <class Alphabet>
class SymbolPoly {
 public:
  using TermMap = std::map<SymbolMonomial, Coeff>;

  SymbolPoly(Ring ring, std::size_t m) : ring_(std::move(ring)), m_(m) {}

  static SymbolPoly constant(Ring ring, std::size_t m, const Coeff& c);
  /// Throws std::invalid_argument on order 0, mismatched m, or (for
  /// PrimitiveSymbols) a non-primitive monomial.
  static SymbolPoly symbol(Ring ring, const ESymbol& s);

  const Ring& ring() const { return ring_; }
  std::size_t m() const { return m_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(const SymbolMonomial& mono) const;

  void add_term(const SymbolMonomial& mono, const Coeff& c);

  SymbolPoly& operator+=(const SymbolPoly& other);
  SymbolPoly& operator-=(const SymbolPoly& other);
  SymbolPoly scaled(const Coeff& c) const;
  SymbolPoly pow(unsigned k) const;
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) { return a.times(b); }
  friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) {
    return a.ring_ == b.ring_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  /// "E[2;(1,0)]*E[1;(0,1)] - E[1;(1,0)]*E[1;(1,1)] + E[1;(2,1)]", or "0".
  std::string to_string() const;

 private:
  void validate(const SymbolMonomial& mono) const;
  void require_compatible(const SymbolPoly& other) const;
  SymbolPoly times(const SymbolPoly& other) const;

  Ring ring_;
  std::size_t m_;
  TermMap terms_;
};

extern template class SymbolPoly<AnyMonomialSymbols>;
extern template class SymbolPoly<PrimitiveSymbols>;

/// Polynomial in e_i(mu), mu any positive-degree monomial.
using MonoEPoly = SymbolPoly<AnyMonomialSymbols>;
/// Element of C(m): polynomial in the free generators e_{i,nu}, nu primitive.
using GenPoly = SymbolPoly<PrimitiveSymbols>;

/// Rewrites basis elements into generator polynomials for one ambient, m and
/// ring, memoizing the recursion across calls.
class Rewriter {
 public:
  Rewriter(Ambient ambient, std::size_t m, Ring ring) : ambient_(ambient), m_(m), ring_(std::move(ring)) {}

  const Ambient& ambient() const { return ambient_; }
  std::size_t m() const { return m_; }
  const Ring& ring() const { return ring_; }

  /// Peels the largest support monomial off each e_alpha and subtracts the
  /// product-formula corrections, recursing on strictly smaller weight.
  MonoEPoly reduce(const MsfElement& x);
  const MonoEPoly& reduce_basis(const AlphaIndex& alpha);

  /// Replaces each e_i(nu^k), k >= 2, by P_{i,k}(e_{1,nu}, e_{2,nu}, ...),
  /// dropping e_{j,nu} with j > n in a finite ambient.
  GenPoly to_primitive(const MonoEPoly& p);

  GenPoly rewrite(const MsfElement& x) { return to_primitive(reduce(x)); }

 private:
  void require_compatible(const MsfElement& x) const;
  const GenPoly& primitive_symbol(const ESymbol& s);

  Ambient ambient_;
  std::size_t m_;
  Ring ring_;
  std::map<AlphaIndex, MonoEPoly> reduced_;
  std::map<ESymbol, GenPoly> primitive_;
};

MonoEPoly reduce_to_monomial_es(const MsfElement& x);
GenPoly primitive_reduce(const MonoEPoly& p, Ambient ambient);
GenPoly rewrite(const MsfElement& x);

/// Substitutes each symbol e_i(mu) by the basis element e_{mu:i} of the given
/// ambient (zero when i > n) and multiplies out with the product formula.
template <class Alphabet>
MsfElement evaluate(const SymbolPoly<Alphabet>& g, Ambient ambient);

/// Over Q: re-expresses every e_{k,nu} through the power sums
/// e_1(nu^j) by Newton's identities. The result uses only order-1 symbols.
MonoEPoly to_e1_symbols(const GenPoly& g);

/// The number of monomials of C(m) of multidegree a, enumerated directly
/// over the generator alphabet.
std::uint64_t count_generator_monomials(const Multidegree& a);

}  // namespace msym
