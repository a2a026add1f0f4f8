#include "msym/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msym {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("monomials in " + std::to_string(a) + " and " + std::to_string(b) +
                                " variables cannot be combined");
  }
}

std::uint64_t sum(const std::vector<Exponent>& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

}  // namespace

Multidegree::Multidegree(std::vector<Exponent> entries) : entries_(std::move(entries)), total_(sum(entries_)) {}

bool Multidegree::divides(const Multidegree& b) const {
  require_same_size(size(), b.size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (entries_[i] > b.entries_[i]) return false;
  }
  return true;
}

Multidegree& Multidegree::operator+=(const Multidegree& other) {
  require_same_size(size(), other.size());
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  total_ += other.total_;
  return *this;
}

Multidegree Multidegree::scaled(Exponent k) const {
  Multidegree r = *this;
  for (auto& e : r.entries_) e *= k;
  r.total_ *= k;
  return r;
}

std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
  require_same_size(a.size(), b.size());
  if (auto c = a.total_ <=> b.total_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

std::string Multidegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)), total_(sum(exps_)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::pow(Exponent k) const {
  Monomial r = *this;
  for (auto& e : r.exps_) e *= k;
  r.total_ *= k;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(nvars(), other.nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_size(nvars(), other.nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  total_ += other.total_;
  return *this;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return mono_cmp(a, b); }

std::strong_ordering mono_cmp(const Monomial& a, const Monomial& b) {
  require_same_size(a.nvars(), b.nvars());
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t Monomial::hash() const {
  std::size_t h = exps_.size();
  for (auto e : exps_) h = h * 1000003u ^ e;
  return h;
}

std::string Monomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "y" + std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Monomial::exponent_string() const { return Multidegree(exps_).to_string(); }

PrimitiveRoot primitive_decompose(const Monomial& mu) {
  if (mu.is_one()) throw std::invalid_argument("the identity monomial has no primitive root");
  Exponent g = 0;
  for (auto e : mu.exponents()) g = std::gcd(g, e);
  std::vector<Exponent> root(mu.exponents().begin(), mu.exponents().end());
  for (auto& e : root) e /= g;
  return {Monomial(std::move(root)), g};
}

bool is_primitive(const Monomial& mu) { return !mu.is_one() && primitive_decompose(mu).power == 1; }

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint64_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i == nvars) {
      Monomial mu(cur);
      if (!mu.is_one()) out.push_back(std::move(mu));
      return;
    }
    for (Exponent e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_dividing(const Monomial& bound) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(bound.nvars(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == bound.nvars()) {
      Monomial mu(cur);
      if (!mu.is_one()) out.push_back(std::move(mu));
      return;
    }
    for (Exponent e = 0; e <= bound[i]; ++e) {
      cur[i] = e;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace msym
