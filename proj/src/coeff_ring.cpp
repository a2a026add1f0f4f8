#include "msym/coeff_ring.hpp"

#include "msym/error.hpp"

#include <charconv>
#include <stdexcept>

namespace msym {

Ring Ring::integers() { return Ring(RingKind::Integers, mpz_class(0)); }

Ring Ring::rationals() { return Ring(RingKind::Rationals, mpz_class(0)); }

Ring Ring::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("Zmod modulus must be a prime >= 2, got " + p.get_str());
  }
  return Ring(RingKind::PrimeField, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Zmod:";
  if (text.starts_with(prefix)) {
    auto digits = text.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("bad ring modulus in '" + std::string(text) + "'");
    }
    mpz_class p(std::string(digits), 10);
    try {
      return prime_field(p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown ring '" + std::string(text) + "' (expected Z, Q or Zmod:<p>)");
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "Zmod:" + modulus_.get_str();
  }
  return {};
}

void Ring::reduce(Coeff& a) const {
  if (kind_ != RingKind::PrimeField) return;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
  a = Coeff(r);
}

Coeff Ring::embed(const mpz_class& k) const {
  Coeff a(k);
  reduce(a);
  return a;
}

Coeff Ring::add(const Coeff& a, const Coeff& b) const {
  Coeff r = a + b;
  reduce(r);
  return r;
}

Coeff Ring::sub(const Coeff& a, const Coeff& b) const {
  Coeff r = a - b;
  reduce(r);
  return r;
}

Coeff Ring::mul(const Coeff& a, const Coeff& b) const {
  Coeff r = a * b;
  reduce(r);
  return r;
}

Coeff Ring::neg(const Coeff& a) const {
  Coeff r = -a;
  reduce(r);
  return r;
}

Coeff Ring::pow(const Coeff& a, unsigned long e) const {
  Coeff result = one();
  Coeff base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Coeff Ring::inverse(const Coeff& a) const {
  if (!is_field()) throw std::domain_error("inverse requested in " + to_string());
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (kind_ == RingKind::Rationals) return 1 / a;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), a.get_num_mpz_t(), modulus_.get_mpz_t());
  return Coeff(inv);
}

bool Ring::contains(const Coeff& a) const {
  switch (kind_) {
    case RingKind::Rationals:
      return true;
    case RingKind::Integers:
      return a.get_den() == 1;
    case RingKind::PrimeField:
      return a.get_den() == 1 && a.get_num() >= 0 && a.get_num() < modulus_;
  }
  return false;
}

Coeff Ring::normalize(const Coeff& a) const {
  switch (kind_) {
    case RingKind::Rationals:
      return a;
    case RingKind::Integers:
      if (a.get_den() != 1) throw std::domain_error("non-integer coefficient " + a.get_str() + " over Z");
      return a;
    case RingKind::PrimeField: {
      mpz_class den = a.get_den();
      if (den % modulus_ == 0) {
        throw std::domain_error("denominator of " + a.get_str() + " vanishes in " + to_string());
      }
      return mul(embed(a.get_num()), inverse(embed(den)));
    }
  }
  return a;
}

Coeff Ring::parse_coeff(std::string_view text) const {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("bad coefficient '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Coeff q(mpz_class(num_str, 10), d);
  q.canonicalize();
  try {
    return normalize(q);
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
}

std::string Ring::format(const Coeff& a) { return a.get_str(); }

}  // namespace msym
