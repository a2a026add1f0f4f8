#include "msym/msf.hpp"

#include "msym/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msym {

std::size_t Ambient::size() const {
  if (!n_) throw std::logic_error("the infinite ambient has no slot count");
  return *n_;
}

// --- AlphaIndex -------------------------------------------------------------

AlphaIndex AlphaIndex::from_entries(std::size_t m, std::vector<AlphaEntry> entries) {
  AlphaIndex a(m);
  for (const auto& e : entries) {
    if (e.mono.nvars() != m) throw std::invalid_argument("alpha monomial " + e.mono.to_string() + " not in m = " + std::to_string(m));
    if (e.mono.is_one()) throw std::invalid_argument("alpha support must have positive degree");
    if (e.mult == 0) throw std::invalid_argument("alpha multiplicities must be >= 1");
  }
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.mono < y.mono; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].mono == entries[i].mono) {
      throw std::invalid_argument("repeated monomial " + entries[i].mono.to_string() + " in alpha");
    }
  }
  for (const auto& e : entries) {
    a.weight_ += e.mult;
    a.multidegree_ += e.mono.multidegree().scaled(e.mult);
  }
  a.support_ = std::move(entries);
  return a;
}

AlphaIndex AlphaIndex::single(const Monomial& mu, std::uint32_t k) {
  return from_entries(mu.nvars(), {AlphaEntry{mu, k}});
}

std::uint32_t AlphaIndex::mult(const Monomial& mu) const {
  for (const auto& e : support_) {
    if (e.mono == mu) return e.mult;
  }
  return 0;
}

std::strong_ordering operator<=>(const AlphaIndex& a, const AlphaIndex& b) {
  if (a.m_ != b.m_) return a.m_ <=> b.m_;
  if (auto c = a.multidegree_ <=> b.multidegree_; c != 0) return c;
  const std::size_t len = std::min(a.support_.size(), b.support_.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (auto c = a.support_[i].mono <=> b.support_[i].mono; c != 0) return c;
    if (auto c = a.support_[i].mult <=> b.support_[i].mult; c != 0) return c;
  }
  return a.support_.size() <=> b.support_.size();
}

std::string AlphaIndex::to_string() const {
  if (support_.empty()) return "1";
  std::string mults;
  std::string args;
  // Largest monomial first.
  for (auto it = support_.rbegin(); it != support_.rend(); ++it) {
    if (it != support_.rbegin()) {
      mults += ',';
      args += ", ";
    }
    mults += std::to_string(it->mult);
    args += it->mono.to_string();
  }
  return "e_{(" + mults + ")}(" + args + ")";
}

MergedIndex merge_repeats(const Ring& ring, std::size_t m, std::span<const AlphaEntry> args) {
  std::vector<AlphaEntry> sorted;
  sorted.reserve(args.size());
  for (const auto& e : args) {
    if (e.mult > 0) sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.mono < y.mono; });

  std::vector<AlphaEntry> merged;
  mpz_class multinomial = 1;
  for (auto& e : sorted) {
    if (!merged.empty() && merged.back().mono == e.mono) {
      auto& group = merged.back();
      // multinomial(s1, ..., sj) = multinomial(s1, ..., s_{j-1}) * C(s1 + ... + sj, sj)
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), group.mult + e.mult, e.mult);
      multinomial *= binom;
      group.mult += e.mult;
    } else {
      merged.push_back(std::move(e));
    }
  }
  return {AlphaIndex::from_entries(m, std::move(merged)), ring.embed(multinomial)};
}

// --- margin tables ----------------------------------------------------------

std::uint64_t MarginTable::weight() const {
  return std::accumulate(cells_.begin(), cells_.end(), std::uint64_t{0});
}

void for_each_margin_table(std::span<const std::uint32_t> rows, std::span<const std::uint32_t> cols,
                           std::optional<std::uint64_t> max_weight, bool first_row_touches,
                           const std::function<void(const MarginTable&)>& visit) {
  const std::size_t k = rows.size();
  const std::size_t h = cols.size();
  if (first_row_touches && (k == 0 || h == 0)) return;

  const std::uint64_t margin_total = std::accumulate(rows.begin(), rows.end(), std::uint64_t{0}) +
                                     std::accumulate(cols.begin(), cols.end(), std::uint64_t{0});
  // weight = margin_total - interior, so the interior must reach `needed`.
  const std::uint64_t needed = max_weight && margin_total > *max_weight ? margin_total - *max_weight : 0;

  MarginTable table(k, h);
  std::vector<std::uint32_t> row_left(rows.begin(), rows.end());
  std::vector<std::uint32_t> col_left(cols.begin(), cols.end());
  std::uint64_t interior = 0;

  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == k * h) {
      if (interior < needed) return;
      if (first_row_touches) {
        std::uint64_t first = 0;
        for (std::size_t j = 1; j <= h; ++j) first += table(1, j);
        if (first == 0) return;
      }
      for (std::size_t i = 1; i <= k; ++i) table(i, 0) = row_left[i - 1];
      for (std::size_t j = 1; j <= h; ++j) table(0, j) = col_left[j - 1];
      visit(table);
      return;
    }
    const std::size_t i = cell / h;
    const std::size_t j = cell % h;
    // Upper bound on what the remaining cells can still add to the interior.
    std::uint64_t row_cap = 0;
    for (std::size_t r = i; r < k; ++r) row_cap += row_left[r];
    std::uint64_t col_cap = std::accumulate(col_left.begin(), col_left.end(), std::uint64_t{0});
    if (interior + std::min(row_cap, col_cap) < needed) return;

    const std::uint32_t hi = std::min(row_left[i], col_left[j]);
    for (std::uint32_t v = 0; v <= hi; ++v) {
      table(i + 1, j + 1) = v;
      row_left[i] -= v;
      col_left[j] -= v;
      interior += v;
      self(self, cell + 1);
      interior -= v;
      row_left[i] += v;
      col_left[j] += v;
    }
    table(i + 1, j + 1) = 0;
  };
  rec(rec, 0);
}

// --- MsfElement -------------------------------------------------------------

MsfElement MsfElement::one(Ambient ambient, std::size_t m, Ring ring) {
  MsfElement x(ambient, m, ring);
  x.add_term(AlphaIndex(m), Coeff(1));
  return x;
}

Coeff MsfElement::coefficient(const AlphaIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void MsfElement::add_term(const AlphaIndex& alpha, const Coeff& c, OnVanishing policy) {
  if (alpha.m() != m_) throw AmbientMismatch("index in m = " + std::to_string(alpha.m()) + ", element in m = " + std::to_string(m_));
  if (!ambient_.admits(alpha.weight())) {
    if (policy == OnVanishing::Truncate) return;
    throw VanishingIndex(alpha.to_string() + " has weight " + std::to_string(alpha.weight()) +
                         " and vanishes in n = " + ambient_.to_string());
  }
  Coeff v = ring_.normalize(c);
  if (Ring::is_zero(v)) return;
  auto [it, inserted] = terms_.try_emplace(alpha, v);
  if (!inserted) {
    it->second = ring_.add(it->second, v);
    if (Ring::is_zero(it->second)) terms_.erase(it);
  }
}

void MsfElement::require_compatible(const MsfElement& other) const {
  if (!(ambient_ == other.ambient_) || m_ != other.m_ || !(ring_ == other.ring_)) {
    throw AmbientMismatch("elements of (n=" + ambient_.to_string() + ", m=" + std::to_string(m_) + ", " +
                          ring_.to_string() + ") and (n=" + other.ambient_.to_string() + ", m=" +
                          std::to_string(other.m_) + ", " + other.ring_.to_string() + ")");
  }
}

MsfElement& MsfElement::operator+=(const MsfElement& other) {
  require_compatible(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

MsfElement& MsfElement::operator-=(const MsfElement& other) {
  require_compatible(other);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, ring_.neg(c));
  return *this;
}

MsfElement MsfElement::scaled(const Coeff& c) const {
  MsfElement r(ambient_, m_, ring_);
  Coeff s = ring_.normalize(c);
  for (const auto& [alpha, coeff] : terms_) r.add_term(alpha, ring_.mul(coeff, s));
  return r;
}

bool operator==(const MsfElement& a, const MsfElement& b) {
  return a.ambient_ == b.ambient_ && a.m_ == b.m_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

MsfElement operator*(const MsfElement& a, const MsfElement& b) { return product(a, b); }

std::string MsfElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [alpha, c] : terms_) {
    bool negative = sgn(c) < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (alpha.empty()) {
      s += Ring::format(mag);
    } else {
      if (mag != 1) s += Ring::format(mag) + "*";
      s += alpha.to_string();
    }
  }
  return s;
}

// --- construction and expansion ---------------------------------------------

MsfElement e_alpha(std::size_t m, std::vector<AlphaEntry> support, Ambient ambient, const Ring& ring,
                   OnVanishing policy) {
  return e_alpha(AlphaIndex::from_entries(m, std::move(support)), ambient, ring, policy);
}

MsfElement e_alpha(const AlphaIndex& alpha, Ambient ambient, const Ring& ring, OnVanishing policy) {
  MsfElement x(ambient, alpha.m(), ring);
  x.add_term(alpha, Coeff(1), policy);
  return x;
}

NPoly expand_basis(const AlphaIndex& alpha, std::size_t n, const Ring& ring) {
  const std::size_t m = alpha.m();
  if (alpha.weight() > n) return NPoly(ring, n, m);
  const auto support = alpha.support();
  const std::size_t k = support.size();

  // Slot labels: i < k means "support monomial i", k means "1".
  std::vector<std::size_t> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < k; ++i) labels.insert(labels.end(), support[i].mult, i);
  labels.insert(labels.end(), n - alpha.weight(), k);

  Polynomial out(ring, n * m);
  std::vector<Exponent> exps(n * m);
  do {
    std::fill(exps.begin(), exps.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[j] == k) continue;
      const auto& mu = support[labels[j]].mono;
      for (std::size_t i = 0; i < m; ++i) exps[j * m + i] = mu[i];
    }
    out.add_term(Monomial(exps), Coeff(1));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return NPoly(n, m, std::move(out));
}

NPoly expand(const MsfElement& x) {
  if (!x.ambient().is_finite()) throw std::invalid_argument("cannot expand an element of the infinite ambient");
  const std::size_t n = x.ambient().size();
  NPoly out(x.ring(), n, x.m());
  for (const auto& [alpha, c] : x.terms()) out += expand_basis(alpha, n, x.ring()).scaled(c);
  return out;
}

// --- product ----------------------------------------------------------------

void accumulate_basis_product(const AlphaIndex& a, const AlphaIndex& b, const Coeff& scale, MsfElement& out) {
  const auto fs = a.support();
  const auto gs = b.support();
  std::vector<std::uint32_t> rows;
  std::vector<std::uint32_t> cols;
  for (const auto& e : fs) rows.push_back(e.mult);
  for (const auto& e : gs) cols.push_back(e.mult);

  std::vector<Monomial> fg;
  fg.reserve(fs.size() * gs.size());
  for (const auto& f : fs) {
    for (const auto& g : gs) fg.push_back(f.mono * g.mono);
  }

  std::optional<std::uint64_t> cap;
  if (out.ambient().is_finite()) cap = out.ambient().size();

  const Ring& ring = out.ring();
  const std::size_t m = out.m();
  std::vector<AlphaEntry> args;
  for_each_margin_table(rows, cols, cap, false, [&](const MarginTable& t) {
    args.clear();
    for (std::size_t i = 0; i < fs.size(); ++i) args.push_back({fs[i].mono, t(i + 1, 0)});
    for (std::size_t j = 0; j < gs.size(); ++j) args.push_back({gs[j].mono, t(0, j + 1)});
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < gs.size(); ++j) args.push_back({fg[i * gs.size() + j], t(i + 1, j + 1)});
    }
    auto merged = merge_repeats(ring, m, args);
    if (Ring::is_zero(merged.scalar)) return;
    out.add_term(merged.index, ring.mul(scale, merged.scalar));
  });
}

MsfElement product(const MsfElement& x, const MsfElement& y) {
  x.require_compatible(y);
  MsfElement out(x.ambient(), x.m(), x.ring());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) accumulate_basis_product(a, b, x.ring().mul(ca, cb), out);
  }
  return out;
}

MsfElement truncate(const MsfElement& x, Ambient target) {
  if (!x.ambient().dominates(target)) {
    throw std::invalid_argument("cannot truncate from n = " + x.ambient().to_string() + " to n = " + target.to_string());
  }
  MsfElement out(target, x.m(), x.ring());
  for (const auto& [alpha, c] : x.terms()) out.add_term(alpha, c, OnVanishing::Truncate);
  return out;
}

namespace {

// Sums prod lambda^alpha e_alpha over |alpha| = k supported on the terms of f,
// optionally only those of multidegree *only.
MsfElement ek_impl(const MPoly& f, std::uint32_t k, Ambient ambient, const Multidegree* only) {
  if (!Ring::is_zero(f.constant_term())) throw std::invalid_argument("e_k(f) needs f with zero constant term");
  const Ring& ring = f.ring();
  const std::size_t m = f.nvars();
  MsfElement out(ambient, m, ring);
  if (!ambient.admits(k)) return out;
  if (only && only->size() != m) throw std::invalid_argument("multidegree length differs from m");

  std::vector<std::pair<Monomial, Coeff>> terms(f.terms().begin(), f.terms().end());
  std::vector<Exponent> left;
  if (only) left.assign(only->entries().begin(), only->entries().end());
  auto fits = [&](const Monomial& mu) {
    if (!only) return true;
    for (std::size_t i = 0; i < m; ++i) {
      if (mu[i] > left[i]) return false;
    }
    return true;
  };
  auto take = [&](const Monomial& mu, long sign) {
    if (!only) return;
    for (std::size_t i = 0; i < m; ++i) left[i] = static_cast<Exponent>(left[i] - sign * static_cast<long>(mu[i]));
  };

  std::vector<AlphaEntry> entries;
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t remaining, const Coeff& coeff) -> void {
    if (remaining == 0) {
      if (only && !std::all_of(left.begin(), left.end(), [](Exponent e) { return e == 0; })) return;
      out.add_term(AlphaIndex::from_entries(m, entries), coeff);
      return;
    }
    if (i == terms.size()) return;
    self(self, i + 1, remaining, coeff);
    Coeff c = coeff;
    std::uint32_t mult = 0;
    while (mult < remaining && fits(terms[i].first)) {
      take(terms[i].first, 1);
      ++mult;
      c = ring.mul(c, terms[i].second);
      entries.push_back({terms[i].first, mult});
      self(self, i + 1, remaining - mult, c);
      entries.pop_back();
    }
    for (std::uint32_t r = 0; r < mult; ++r) take(terms[i].first, -1);
  };
  rec(rec, 0, k, ring.one());
  return out;
}

}  // namespace

MsfElement ek_of_f(const MPoly& f, std::uint32_t k, Ambient ambient) { return ek_impl(f, k, ambient, nullptr); }

MsfElement ek_of_f_part(const MPoly& f, std::uint32_t k, Ambient ambient, const Multidegree& a) {
  return ek_impl(f, k, ambient, &a);
}

std::vector<AlphaIndex> enumerate_alpha(const Multidegree& a) {
  const std::size_t m = a.size();
  std::vector<Exponent> bound(a.entries().begin(), a.entries().end());
  const auto monos = monomials_dividing(Monomial(bound));

  std::vector<AlphaIndex> out;
  std::vector<AlphaEntry> entries;
  std::vector<Exponent> left = bound;
  auto fits = [&](const Monomial& mu) {
    for (std::size_t i = 0; i < m; ++i) {
      if (mu[i] > left[i]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (std::all_of(left.begin(), left.end(), [](Exponent e) { return e == 0; })) {
      out.push_back(AlphaIndex::from_entries(m, entries));
      return;
    }
    if (idx == monos.size()) return;
    self(self, idx + 1);
    const auto& mu = monos[idx];
    std::uint32_t mult = 0;
    while (fits(mu)) {
      for (std::size_t i = 0; i < m; ++i) left[i] -= mu[i];
      ++mult;
      entries.push_back({mu, mult});
      self(self, idx + 1);
      entries.pop_back();
    }
    for (std::size_t i = 0; i < m; ++i) left[i] += mu[i] * mult;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace msym
