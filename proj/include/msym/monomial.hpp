#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace msym {

using Exponent = std::uint32_t;

/// A point of N^m: the multidegree of a monomial or of a homogeneous element.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::size_t m) : entries_(m, 0) {}
  explicit Multidegree(std::vector<Exponent> entries);
  Multidegree(std::initializer_list<Exponent> entries) : Multidegree(std::vector<Exponent>(entries)) {}

  std::size_t size() const { return entries_.size(); }
  Exponent operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Exponent> entries() const { return entries_; }
  std::uint64_t total() const { return total_; }
  bool is_zero() const { return total_ == 0; }

  /// Componentwise a <= b.
  bool divides(const Multidegree& b) const;

  Multidegree& operator+=(const Multidegree& other);
  friend Multidegree operator+(Multidegree a, const Multidegree& b) { return a += b; }
  Multidegree scaled(Exponent k) const;

  friend bool operator==(const Multidegree& a, const Multidegree& b) = default;
  /// Graded lexicographic: total first, then entries lexicographically.
  friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b);

  std::string to_string() const;

 private:
  std::vector<Exponent> entries_;
  std::uint64_t total_ = 0;
};

/// A monomial y_1^{e_1} ... y_m^{e_m}. The number of variables travels with
/// the value and binary operations reject mismatches.
class Monomial {
 public:
  Monomial() = default;
  /// The identity monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }

  Multidegree multidegree() const { return Multidegree(exps_); }
  Monomial pow(Exponent k) const;
  /// True when every exponent of *this is <= the matching exponent of other.
  bool divides(const Monomial& other) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Canonical order: total degree, then lexicographic with y_1 heaviest.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  /// "y1^2*y2", or "1" for the identity.
  std::string to_string() const;
  /// "(2,1)"
  std::string exponent_string() const;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t total_ = 0;
};

/// Three-way comparison under the canonical order; throws on mismatched m.
std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b);

/// mu = root^power with root primitive (gcd of exponents 1).
struct PrimitiveRoot {
  Monomial root;
  Exponent power;
};

/// Throws std::invalid_argument on the identity monomial.
PrimitiveRoot primitive_decompose(const Monomial& mu);
bool is_primitive(const Monomial& mu);

/// All monomials in `nvars` variables with positive total degree <= max_degree,
/// in canonical order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t max_degree);
/// All nonidentity monomials dividing `bound` (componentwise), in canonical order.
std::vector<Monomial> monomials_dividing(const Monomial& bound);

}  // namespace msym

template <>
struct std::hash<msym::Monomial> {
  std::size_t operator()(const msym::Monomial& m) const noexcept { return m.hash(); }
};
