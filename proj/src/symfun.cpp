#include "msym/symfun.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace msym {

EMonomial::EMonomial(std::vector<Exponent> powers) : powers_(std::move(powers)) {
  while (!powers_.empty() && powers_.back() == 0) powers_.pop_back();
}

EMonomial EMonomial::generator(std::uint32_t i, Exponent power) {
  if (i == 0) throw std::invalid_argument("e_0 is not a generator");
  std::vector<Exponent> p(i, 0);
  p[i - 1] = power;
  return EMonomial(std::move(p));
}

std::uint64_t EMonomial::weight() const {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < powers_.size(); ++i) w += std::uint64_t{powers_[i]} * (i + 1);
  return w;
}

EMonomial EMonomial::operator*(const EMonomial& other) const {
  std::vector<Exponent> p(std::max(powers_.size(), other.powers_.size()), 0);
  for (std::size_t i = 0; i < powers_.size(); ++i) p[i] += powers_[i];
  for (std::size_t i = 0; i < other.powers_.size(); ++i) p[i] += other.powers_[i];
  return EMonomial(std::move(p));
}

std::strong_ordering operator<=>(const EMonomial& a, const EMonomial& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  const std::size_t len = std::max(a.powers_.size(), b.powers_.size());
  for (std::size_t i = 0; i < len; ++i) {
    Exponent x = i < a.powers_.size() ? a.powers_[i] : 0;
    Exponent y = i < b.powers_.size() ? b.powers_[i] : 0;
    if (auto c = x <=> y; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string EMonomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "e" + std::to_string(i + 1);
    if (powers_[i] > 1) s += "^" + std::to_string(powers_[i]);
  }
  return s.empty() ? "1" : s;
}

EPoly EPoly::constant(const mpz_class& c) {
  EPoly p;
  p.add_term(EMonomial(), c);
  return p;
}

EPoly EPoly::generator(std::uint32_t i) {
  EPoly p;
  p.add_term(EMonomial::generator(i), 1);
  return p;
}

void EPoly::add_term(const EMonomial& mono, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class EPoly::coefficient(const EMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

bool EPoly::is_homogeneous(std::uint64_t d) const {
  for (const auto& [mono, c] : terms_) {
    if (mono.weight() != d) return false;
  }
  return true;
}

EPoly EPoly::homogeneous_component(std::uint64_t d) const {
  EPoly r;
  for (const auto& [mono, c] : terms_) {
    if (mono.weight() == d) r.add_term(mono, c);
  }
  return r;
}

EPoly& EPoly::operator+=(const EPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

EPoly& EPoly::operator-=(const EPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

EPoly EPoly::scaled(const mpz_class& c) const {
  EPoly r;
  for (const auto& [mono, coeff] : terms_) r.add_term(mono, coeff * c);
  return r;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
  EPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

std::string EPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    mpz_class mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mono.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += mono.to_string();
    }
  }
  return s;
}

Polynomial elementary_polynomial(std::uint32_t k, std::size_t nvars, const Ring& ring) {
  Polynomial out(ring, nvars);
  if (k > nvars) return out;
  std::vector<Exponent> exps(nvars, 0);
  std::fill(exps.end() - k, exps.end(), 1);
  do {
    out.add_term(Monomial(exps), Coeff(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

EPoly newton_p(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("p_0 depends on the number of variables");
  std::vector<EPoly> p(k + 1);
  for (std::uint32_t r = 1; r <= k; ++r) {
    // p_r = sum_{i=1}^{r-1} (-1)^{i-1} e_i p_{r-i} + (-1)^{r-1} r e_r
    EPoly acc;
    for (std::uint32_t i = 1; i < r; ++i) {
      EPoly t = EPoly::generator(i) * p[r - i];
      acc += (i % 2 == 1) ? t : t.scaled(-1);
    }
    acc += EPoly::generator(r).scaled(r % 2 == 1 ? mpz_class(r) : mpz_class(-static_cast<long>(r)));
    p[r] = std::move(acc);
  }
  return p[k];
}

namespace {

bool is_symmetric(const Polynomial& s) {
  const std::size_t n = s.nvars();
  for (std::size_t a = 0; a + 1 < n; ++a) {
    Polynomial swapped(s.ring(), n);
    for (const auto& [mono, c] : s.terms()) {
      std::vector<Exponent> e(mono.exponents().begin(), mono.exponents().end());
      std::swap(e[a], e[a + 1]);
      swapped.add_term(Monomial(std::move(e)), c);
    }
    if (!(swapped == s)) return false;
  }
  return true;
}

}  // namespace

namespace {

// A symmetric polynomial in n variables is determined by its coefficients on
// monomials with non-increasing exponents. Partitions carry no zero parts.
using Partition = std::vector<Exponent>;
using PartitionCoeffs = std::map<Partition, mpz_class>;

// Distinct values of a partition padded with zeros to n parts, with counts.
std::vector<std::pair<Exponent, std::size_t>> blocks(const Partition& p, std::size_t n) {
  std::vector<std::pair<Exponent, std::size_t>> out;
  for (auto v : p) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  if (p.size() < n) out.emplace_back(0, n - p.size());
  return out;
}

Partition sorted_partition(std::vector<Exponent> e) {
  std::sort(e.begin(), e.end(), std::greater<>());
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

// Calls visit(shifted, weight) for every way of moving r of the n padded
// positions of p by `step` (+1 or -1); positions with equal values are
// grouped and the binomial counts the choices inside a group.
template <class Visit>
void shift_positions(const Partition& p, std::size_t n, std::uint32_t r, int step, Visit&& visit) {
  const auto bl = blocks(p, n);
  std::vector<std::size_t> take(bl.size(), 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i == bl.size()) {
      if (left != 0) return;
      std::vector<Exponent> e;
      mpz_class weight = 1;
      for (std::size_t b = 0; b < bl.size(); ++b) {
        const auto [value, count] = bl[b];
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), count, take[b]);
        weight *= binom;
        const Exponent moved = static_cast<Exponent>(static_cast<long>(value) + step);
        e.insert(e.end(), take[b], moved);
        e.insert(e.end(), count - take[b], value);
      }
      visit(sorted_partition(std::move(e)), weight);
      return;
    }
    const auto [value, count] = bl[i];
    const std::size_t most = (step < 0 && value == 0) ? 0 : std::min<std::size_t>(count, left);
    for (std::size_t t = 0; t <= most; ++t) {
      take[i] = t;
      rec(i + 1, left - static_cast<std::uint32_t>(t));
    }
    take[i] = 0;
  };
  rec(0, r);
}

// e_r * f in n variables, on partition coefficients.
PartitionCoeffs times_elementary(const PartitionCoeffs& f, std::uint32_t r, std::size_t n) {
  std::set<Partition> targets;
  for (const auto& [nu, c] : f) {
    shift_positions(nu, n, r, +1, [&](Partition mu, const mpz_class&) { targets.insert(std::move(mu)); });
  }
  PartitionCoeffs out;
  for (const auto& mu : targets) {
    // Coefficient of x^mu: sum over r-subsets S of positive positions of f[mu - 1_S].
    mpz_class total = 0;
    shift_positions(mu, n, r, -1, [&](const Partition& nu, const mpz_class& weight) {
      if (auto it = f.find(nu); it != f.end()) total += weight * it->second;
    });
    if (total != 0) out.emplace(mu, total);
  }
  return out;
}

}  // namespace

EPoly to_e_basis(const Polynomial& s) {
  if (s.ring().kind() != RingKind::Integers) throw std::invalid_argument("to_e_basis works over Z");
  const std::size_t n = s.nvars();
  if (s.total_degree() > n) {
    throw std::invalid_argument("degree " + std::to_string(s.total_degree()) + " exceeds the " +
                                std::to_string(n) + " variables; the e-basis is not faithful there");
  }
  if (!is_symmetric(s)) throw std::invalid_argument("input is not symmetric");

  PartitionCoeffs rest;
  for (const auto& [mono, c] : s.terms()) {
    const auto e = mono.exponents();
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) rest.emplace(sorted_partition({e.begin(), e.end()}), c.get_num());
  }

  // Leading partition lambda (largest degree, then lex) against
  // e_1^{l1-l2} e_2^{l2-l3} ..., whose leading term is x^lambda.
  auto leading = [](const PartitionCoeffs& p) {
    auto best = p.begin();
    for (auto it = p.begin(); it != p.end(); ++it) {
      const std::uint64_t d = std::accumulate(it->first.begin(), it->first.end(), std::uint64_t{0});
      const std::uint64_t bd = std::accumulate(best->first.begin(), best->first.end(), std::uint64_t{0});
      if (d > bd || (d == bd && it->first > best->first)) best = it;
    }
    return best;
  };

  EPoly result;
  while (!rest.empty()) {
    const auto lead = leading(rest);
    const Partition lambda = lead->first;
    const mpz_class c = lead->second;
    std::vector<Exponent> powers(lambda.size(), 0);
    for (std::size_t i = 0; i < lambda.size(); ++i) powers[i] = lambda[i] - (i + 1 < lambda.size() ? lambda[i + 1] : 0);

    PartitionCoeffs product{{Partition{}, mpz_class(1)}};
    for (std::size_t i = 0; i < powers.size(); ++i) {
      for (Exponent r = 0; r < powers[i]; ++r) product = times_elementary(product, static_cast<std::uint32_t>(i + 1), n);
    }
    for (const auto& [mu, d] : product) {
      auto [it, inserted] = rest.try_emplace(mu, 0);
      it->second -= c * d;
      if (it->second == 0) rest.erase(it);
    }
    result.add_term(EMonomial(powers), c);
  }
  return result;
}

EPoly plethysm_P(std::uint32_t h, std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("P_{h,k} needs k >= 1");
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, EPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({h, k}); it != cache.end()) return it->second;
  }
  EPoly result;
  if (h == 0) {
    result = EPoly::constant(1);
  } else {
    const std::size_t n = std::size_t{h} * k;
    const Ring z = Ring::integers();
    Polynomial substituted(z, n);
    const Polynomial eh = elementary_polynomial(h, n, z);
    for (const auto& [mono, c] : eh.terms()) substituted.add_term(mono.pow(k), c);
    result = to_e_basis(substituted);
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace({h, k}, std::move(result)).first->second;
}

Polynomial to_concrete(const EPoly& p, std::size_t nvars, const Ring& ring) {
  return evaluate<Polynomial>(
      p, [&](std::uint32_t i) { return elementary_polynomial(i, nvars, ring); },
      [&](const mpz_class& c) { return Polynomial::constant(ring, nvars, ring.embed(c)); });
}

}  // namespace msym
