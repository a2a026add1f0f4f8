#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/monomial.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace msym {

/// Sparse polynomial over a Ring in a fixed number of variables.
///
/// Terms are kept sorted by the canonical monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff>;

  Polynomial(Ring ring, std::size_t nvars) : ring_(std::move(ring)), nvars_(nvars) {}

  static Polynomial constant(Ring ring, std::size_t nvars, const Coeff& c);
  static Polynomial term(Ring ring, const Monomial& mono, const Coeff& c);
  static Polynomial variable(Ring ring, std::size_t nvars, std::size_t index);

  const Ring& ring() const { return ring_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(const Monomial& mono) const;
  Coeff constant_term() const { return coefficient(Monomial(nvars_)); }
  std::uint64_t total_degree() const;

  /// Adds c * mono, normalizing c into the ring.
  void add_term(const Monomial& mono, const Coeff& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Coeff& c) const;
  Polynomial pow(unsigned k) const;
  Polynomial operator-() const { return scaled(ring_.embed(-1)); }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Terms from the leading (largest) monomial down; "y1*y2 + 2*y1".
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& other) const;

  Ring ring_;
  std::size_t nvars_;
  TermMap terms_;
};

/// An element of A_R(m) = R[y_1..y_m].
using MPoly = Polynomial;

/// A permutation of {1..n}, stored 0-based: image(j) is the image of slot j.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);
  /// The transposition of 0-based slots a and b.
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
  /// From 1-based images, e.g. {2,1} for (1 2).
  static Permutation from_one_based(const std::vector<std::size_t>& images);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t j) const { return images_[j]; }
  /// (a*b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// An element of A_R(n,m): polynomial in x_i(j), i = 1..m, j = 1..n.
///
/// Exponent vectors are flattened slot-major: slot j occupies positions
/// (j-1)*m .. j*m-1 and holds x_1(j) .. x_m(j).
class NPoly {
 public:
  NPoly(Ring ring, std::size_t n, std::size_t m) : n_(n), m_(m), poly_(std::move(ring), n * m) {}
  NPoly(std::size_t n, std::size_t m, Polynomial poly);

  static NPoly constant(Ring ring, std::size_t n, std::size_t m, const Coeff& c);
  /// x_i(j) with 1-based i and j.
  static NPoly variable(Ring ring, std::size_t n, std::size_t m, std::size_t i, std::size_t j);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const Ring& ring() const { return poly_.ring(); }
  const Polynomial& poly() const { return poly_; }
  const Polynomial::TermMap& terms() const { return poly_.terms(); }
  bool is_zero() const { return poly_.is_zero(); }
  std::size_t size() const { return poly_.size(); }

  NPoly& operator+=(const NPoly& other);
  NPoly& operator-=(const NPoly& other);
  NPoly& operator*=(const NPoly& other);
  NPoly scaled(const Coeff& c) const { return NPoly(n_, m_, poly_.scaled(c)); }
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(const NPoly& a, const NPoly& b);
  friend bool operator==(const NPoly& a, const NPoly& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.poly_ == b.poly_;
  }

  /// "x1(1)*x2(2) + x1(2)*x2(1)"; variables ordered by family then slot.
  std::string to_string() const;

 private:
  void require_compatible(const NPoly& other) const;

  std::size_t n_;
  std::size_t m_;
  Polynomial poly_;
};

/// The S_n-invariant multidegree of a flattened monomial: sum over slots.
Multidegree slot_multidegree(const Monomial& x, std::size_t m);

/// f(j): substitutes y_i -> x_i(j). `j` is 1-based.
NPoly subst_slot(const MPoly& f, std::size_t j, std::size_t n);

/// sigma(x_i(j)) = x_i(sigma(j)).
Monomial act_on_monomial(const Permutation& sigma, const Monomial& x, std::size_t m);
NPoly sn_act(const Permutation& sigma, const NPoly& p);

/// The part of p of multidegree exactly a.
NPoly multidegree_component(const NPoly& p, const Multidegree& a);

/// Parses the textual form produced by NPoly::to_string (integer or p/q
/// coefficients). Throws ParseError.
NPoly parse_npoly(std::string_view text, const Ring& ring, std::size_t n, std::size_t m);

}  // namespace msym
