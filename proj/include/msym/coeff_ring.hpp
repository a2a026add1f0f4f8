#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace msym {

/// Coefficients of every ring are carried as GMP rationals; a Ring keeps them
/// in its canonical subset (integers, lowest-terms rationals, or residues
/// 0..p-1).
using Coeff = mpq_class;

enum class RingKind { Integers, Rationals, PrimeField };

/// An exact commutative coefficient ring: Z, Q or Z/p.
///
/// Rings are immutable values. Arithmetic is total; division is only offered
/// through `inverse` when `is_field()` holds.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  /// Throws std::invalid_argument unless `p` is prime.
  static Ring prime_field(const mpz_class& p);
  /// Parses "Z", "Q" or "Zmod:<p>". Throws ParseError.
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  std::string to_string() const;

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  Coeff embed(const mpz_class& k) const;
  Coeff embed(long k) const { return embed(mpz_class(k)); }

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff pow(const Coeff& a, unsigned long e) const;

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }
  bool is_one(const Coeff& a) const { return a == 1; }

  /// Q and Z/p are fields.
  bool is_field() const { return kind_ != RingKind::Integers; }
  /// Throws std::domain_error on zero or when the ring is not a field.
  Coeff inverse(const Coeff& a) const;

  /// Does `a` already lie in the canonical subset of this ring?
  bool contains(const Coeff& a) const;
  /// Maps a rational into the ring. Non-integers are rejected over Z and
  /// denominators divisible by p over Z/p (std::domain_error).
  Coeff normalize(const Coeff& a) const;
  /// Parses "<int>" or "<int>/<int>" and normalizes. Throws ParseError.
  Coeff parse_coeff(std::string_view text) const;
  static std::string format(const Coeff& a);

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(RingKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}
  void reduce(Coeff& a) const;

  RingKind kind_;
  mpz_class modulus_;  // 0 unless prime field
};

}  // namespace msym
