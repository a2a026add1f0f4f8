#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/monomial.hpp"
#include "msym/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace msym {

/// Number of slots n, or the inverse limit A(infinity, m).
class Ambient {
 public:
  static Ambient finite(std::size_t n) { return Ambient(n); }
  static Ambient infinite() { return Ambient(std::nullopt); }

  bool is_finite() const { return n_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::size_t size() const;
  /// Whether a basis index of this weight survives.
  bool admits(std::uint64_t weight) const { return !n_ || weight <= *n_; }
  /// Every finite n is below infinity.
  bool dominates(const Ambient& other) const { return !n_ || (other.n_ && *other.n_ <= *n_); }
  std::string to_string() const { return n_ ? std::to_string(*n_) : "inf"; }

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  explicit Ambient(std::optional<std::size_t> n) : n_(n) {}
  std::optional<std::size_t> n_;
};

/// One argument of e_alpha: a monomial and its multiplicity.
struct AlphaEntry {
  Monomial mono;
  std::uint32_t mult;

  friend bool operator==(const AlphaEntry&, const AlphaEntry&) = default;
};

/// A finitely supported multiplicity map alpha: M_m^+ -> N.
///
/// Support is sorted strictly increasing in the canonical monomial order,
/// every multiplicity is >= 1 and every monomial has positive degree. The
/// empty index is the unit e_0 = 1.
class AlphaIndex {
 public:
  /// The empty index in m variables.
  explicit AlphaIndex(std::size_t m = 0) : m_(m), multidegree_(m) {}

  /// Validates and sorts. Throws std::invalid_argument on repeated or
  /// constant monomials, zero multiplicities or mismatched m.
  static AlphaIndex from_entries(std::size_t m, std::vector<AlphaEntry> entries);
  /// The index {mu : k}.
  static AlphaIndex single(const Monomial& mu, std::uint32_t k);

  std::size_t m() const { return m_; }
  std::span<const AlphaEntry> support() const { return support_; }
  std::uint64_t weight() const { return weight_; }
  const Multidegree& multidegree() const { return multidegree_; }
  bool empty() const { return support_.empty(); }
  std::uint32_t mult(const Monomial& mu) const;

  friend bool operator==(const AlphaIndex& a, const AlphaIndex& b) {
    return a.m_ == b.m_ && a.support_ == b.support_;
  }
  /// Multidegree first, then lexicographic on the support.
  friend std::strong_ordering operator<=>(const AlphaIndex& a, const AlphaIndex& b);

  /// "e_{(2,1)}(y1, y2)", or "1" for the empty index.
  std::string to_string() const;

 private:
  std::size_t m_;
  std::vector<AlphaEntry> support_;
  std::uint64_t weight_ = 0;
  Multidegree multidegree_;
};

/// Result of collapsing repeated arguments of e_(...)(...).
struct MergedIndex {
  AlphaIndex index;
  Coeff scalar;
};

/// Groups equal monomials, multiplying by the multinomial coefficient of
/// each group computed over Z and embedded into the ring. Entries with zero
/// multiplicity are dropped.
MergedIndex merge_repeats(const Ring& ring, std::size_t m, std::span<const AlphaEntry> args);

/// The gamma array of the product formula for e_alpha * e_beta, with
/// k = |supp alpha| rows and h = |supp beta| columns plus the margin row and
/// column 0. Entry (0,0) is unused and always zero.
class MarginTable {
 public:
  MarginTable(std::size_t k, std::size_t h) : k_(k), h_(h), cells_((k + 1) * (h + 1), 0) {}

  std::size_t rows() const { return k_; }
  std::size_t cols() const { return h_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return cells_[i * (h_ + 1) + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return cells_[i * (h_ + 1) + j]; }
  std::uint64_t weight() const;

 private:
  std::size_t k_;
  std::size_t h_;
  std::vector<std::uint32_t> cells_;
};

/// Enumerates every table with row sums `rows` (over columns 0..h) and column
/// sums `cols` (over rows 0..k), interior cells in row-major lexicographic
/// order. Tables of weight above `max_weight` are skipped. With
/// `first_row_touches` set, only tables whose row 1 has a nonzero interior cell
/// are produced.
void for_each_margin_table(std::span<const std::uint32_t> rows, std::span<const std::uint32_t> cols,
                           std::optional<std::uint64_t> max_weight, bool first_row_touches,
                           const std::function<void(const MarginTable&)>& visit);

/// How a finite-ambient constructor treats an index of weight > n.
enum class OnVanishing { Reject, Truncate };

/// An R-linear combination of basis elements e_alpha of A_R(n,m)^{S_n}, or of
/// A_R(infinity,m).
class MsfElement {
 public:
  using TermMap = std::map<AlphaIndex, Coeff>;

  MsfElement(Ambient ambient, std::size_t m, Ring ring) : ambient_(ambient), m_(m), ring_(std::move(ring)) {}

  static MsfElement one(Ambient ambient, std::size_t m, Ring ring);

  const Ambient& ambient() const { return ambient_; }
  std::size_t m() const { return m_; }
  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coeff coefficient(const AlphaIndex& alpha) const;

  /// Adds c * e_alpha. Weight above a finite n throws VanishingIndex unless
  /// `policy` is Truncate, in which case the term is dropped.
  void add_term(const AlphaIndex& alpha, const Coeff& c, OnVanishing policy = OnVanishing::Reject);

  MsfElement& operator+=(const MsfElement& other);
  MsfElement& operator-=(const MsfElement& other);
  MsfElement scaled(const Coeff& c) const;
  friend MsfElement operator+(MsfElement a, const MsfElement& b) { return a += b; }
  friend MsfElement operator-(MsfElement a, const MsfElement& b) { return a -= b; }
  friend MsfElement operator*(const MsfElement& a, const MsfElement& b);
  friend bool operator==(const MsfElement& a, const MsfElement& b);

  /// Throws AmbientMismatch unless ambient, m and ring agree.
  void require_compatible(const MsfElement& other) const;

  /// "2*e_{(2)}(y1) + e_{(1)}(y1^2)", or "0".
  std::string to_string() const;

 private:
  Ambient ambient_;
  std::size_t m_;
  Ring ring_;
  TermMap terms_;
};

/// The basis element e_alpha with coefficient 1.
MsfElement e_alpha(std::size_t m, std::vector<AlphaEntry> support, Ambient ambient, const Ring& ring,
                   OnVanishing policy = OnVanishing::Reject);
MsfElement e_alpha(const AlphaIndex& alpha, Ambient ambient, const Ring& ring,
                   OnVanishing policy = OnVanishing::Reject);

/// Orbit-sum expansion into A_R(n,m). Throws std::invalid_argument on an
/// infinite ambient.
NPoly expand(const MsfElement& x);
/// Expansion of a single basis element in A_R(n,m).
NPoly expand_basis(const AlphaIndex& alpha, std::size_t n, const Ring& ring);

/// Product of two basis elements, accumulated into `out` with factor `scale`.
void accumulate_basis_product(const AlphaIndex& a, const AlphaIndex& b, const Coeff& scale, MsfElement& out);
MsfElement product(const MsfElement& x, const MsfElement& y);

/// Projection to a smaller ambient: drops terms of weight > target.
/// Throws std::invalid_argument when the target exceeds the ambient.
MsfElement truncate(const MsfElement& x, Ambient target);

/// e_k(f) for f with zero constant term: sum over alpha supported on the
/// monomials of f with |alpha| = k of prod lambda_mu^{alpha_mu} e_alpha.
MsfElement ek_of_f(const MPoly& f, std::uint32_t k, Ambient ambient);
/// The multidegree-a part of e_k(f), enumerated without building the rest.
MsfElement ek_of_f_part(const MPoly& f, std::uint32_t k, Ambient ambient, const Multidegree& a);

/// Every alpha with multidegree exactly a (a may be zero: returns {empty}),
/// in canonical order.
std::vector<AlphaIndex> enumerate_alpha(const Multidegree& a);

}  // namespace msym
