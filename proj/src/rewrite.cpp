#include "msym/rewrite.hpp"

#include "msym/error.hpp"
#include "msym/symfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace msym {

// --- symbols ----------------------------------------------------------------

std::string ESymbol::to_string() const { return "E[" + std::to_string(order) + ";" + mono.exponent_string() + "]"; }

std::strong_ordering operator<=>(const ESymbol& a, const ESymbol& b) {
  if (a.order != b.order) return b.order <=> a.order;
  return a.mono <=> b.mono;
}

SymbolMonomial::SymbolMonomial(const ESymbol& s, Exponent power) {
  if (power == 0) return;
  factors_.emplace_back(s, power);
  total_degree_ = s.total_degree() * power;
}

Multidegree SymbolMonomial::multidegree(std::size_t m) const {
  Multidegree d(m);
  for (const auto& [s, p] : factors_) d += s.multidegree().scaled(p);
  return d;
}

SymbolMonomial SymbolMonomial::operator*(const SymbolMonomial& other) const {
  SymbolMonomial r;
  r.total_degree_ = total_degree_ + other.total_degree_;
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

std::strong_ordering operator<=>(const SymbolMonomial& a, const SymbolMonomial& b) {
  if (a.total_degree_ != b.total_degree_) return b.total_degree_ <=> a.total_degree_;
  auto length = [](const SymbolMonomial& s) {
    std::uint64_t n = 0;
    for (const auto& [sym, power] : s.factors_) n += power;
    return n;
  };
  if (auto c = length(b) <=> length(a); c != 0) return c;
  // Lexicographic comparison of the factor sequences written out with
  // repetition, e.g. E1 E1 E2 vs E1 E2.
  const auto& x = a.factors_;
  const auto& y = b.factors_;
  std::size_t i = 0, j = 0;
  Exponent used_x = 0, used_y = 0;
  while (i < x.size() && j < y.size()) {
    if (auto c = x[i].first <=> y[j].first; c != 0) return c;
    const Exponent rx = x[i].second - used_x;
    const Exponent ry = y[j].second - used_y;
    if (rx == ry) {
      ++i, ++j;
      used_x = used_y = 0;
    } else if (rx < ry) {
      used_y += rx;
      ++i;
      used_x = 0;
    } else {
      used_x += ry;
      ++j;
      used_y = 0;
    }
  }
  return (i < x.size()) <=> (j < y.size());
}

std::string SymbolMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [sym, p] : factors_) {
    if (!s.empty()) s += '*';
    s += sym.to_string();
    if (p > 1) s += "^" + std::to_string(p);
  }
  return s;
}

// --- SymbolPoly -------------------------------------------------------------

template <class Alphabet>
SymbolPoly<Alphabet> SymbolPoly<Alphabet>::constant(Ring ring, std::size_t m, const Coeff& c) {
  SymbolPoly p(std::move(ring), m);
  p.add_term(SymbolMonomial(), c);
  return p;
}

template <class Alphabet>
SymbolPoly<Alphabet> SymbolPoly<Alphabet>::symbol(Ring ring, const ESymbol& s) {
  SymbolPoly p(std::move(ring), s.mono.nvars());
  p.add_term(SymbolMonomial(s), Coeff(1));
  return p;
}

template <class Alphabet>
Coeff SymbolPoly<Alphabet>::coefficient(const SymbolMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Coeff(0) : it->second;
}

template <class Alphabet>
void SymbolPoly<Alphabet>::validate(const SymbolMonomial& mono) const {
  for (const auto& [s, p] : mono.factors()) {
    if (s.order == 0) throw std::invalid_argument("symbol order must be >= 1");
    if (s.mono.nvars() != m_) throw std::invalid_argument("symbol " + s.to_string() + " not in m = " + std::to_string(m_));
    if (s.mono.is_one()) throw std::invalid_argument("symbol monomial must have positive degree");
    if constexpr (Alphabet::primitive_only) {
      if (!is_primitive(s.mono)) throw std::invalid_argument("generator " + s.to_string() + " is not primitive");
    }
  }
}

template <class Alphabet>
void SymbolPoly<Alphabet>::add_term(const SymbolMonomial& mono, const Coeff& c) {
  validate(mono);
  Coeff v = ring_.normalize(c);
  if (Ring::is_zero(v)) return;
  auto [it, inserted] = terms_.try_emplace(mono, v);
  if (!inserted) {
    it->second = ring_.add(it->second, v);
    if (Ring::is_zero(it->second)) terms_.erase(it);
  }
}

template <class Alphabet>
void SymbolPoly<Alphabet>::require_compatible(const SymbolPoly& other) const {
  if (!(ring_ == other.ring_) || m_ != other.m_) {
    throw AmbientMismatch("symbol polynomials over " + ring_.to_string() + "/m=" + std::to_string(m_) + " and " +
                          other.ring_.to_string() + "/m=" + std::to_string(other.m_));
  }
}

template <class Alphabet>
SymbolPoly<Alphabet>& SymbolPoly<Alphabet>::operator+=(const SymbolPoly& other) {
  require_compatible(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

template <class Alphabet>
SymbolPoly<Alphabet>& SymbolPoly<Alphabet>::operator-=(const SymbolPoly& other) {
  require_compatible(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, ring_.neg(c));
  return *this;
}

template <class Alphabet>
SymbolPoly<Alphabet> SymbolPoly<Alphabet>::scaled(const Coeff& c) const {
  SymbolPoly r(ring_, m_);
  Coeff s = ring_.normalize(c);
  if (Ring::is_zero(s)) return r;
  for (const auto& [mono, coeff] : terms_) r.add_term(mono, ring_.mul(coeff, s));
  return r;
}

template <class Alphabet>
SymbolPoly<Alphabet> SymbolPoly<Alphabet>::times(const SymbolPoly& other) const {
  require_compatible(other);
  SymbolPoly r(ring_, m_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Coeff c = ring_.mul(ca, cb);
      if (Ring::is_zero(c)) continue;
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, c);
      if (!inserted) it->second = ring_.add(it->second, c);
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return Ring::is_zero(kv.second); });
  return r;
}

template <class Alphabet>
SymbolPoly<Alphabet> SymbolPoly<Alphabet>::pow(unsigned k) const {
  SymbolPoly r = constant(ring_, m_, Coeff(1));
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

template <class Alphabet>
std::string SymbolPoly<Alphabet>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, c] : terms_) {
    bool negative = sgn(c) < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (mono.is_one()) {
      s += Ring::format(mag);
    } else {
      if (mag != 1) s += Ring::format(mag) + "*";
      s += mono.to_string();
    }
  }
  return s;
}

template class SymbolPoly<AnyMonomialSymbols>;
template class SymbolPoly<PrimitiveSymbols>;

// --- Rewriter ---------------------------------------------------------------

void Rewriter::require_compatible(const MsfElement& x) const {
  if (!(x.ambient() == ambient_) || x.m() != m_ || !(x.ring() == ring_)) {
    throw AmbientMismatch("rewriter for (n=" + ambient_.to_string() + ", m=" + std::to_string(m_) + ", " +
                          ring_.to_string() + ") given an element of (n=" + x.ambient().to_string() +
                          ", m=" + std::to_string(x.m()) + ", " + x.ring().to_string() + ")");
  }
}

const MonoEPoly& Rewriter::reduce_basis(const AlphaIndex& alpha) {
  if (auto it = reduced_.find(alpha); it != reduced_.end()) return it->second;

  MonoEPoly result(ring_, m_);
  const auto support = alpha.support();
  if (support.empty()) {
    result = MonoEPoly::constant(ring_, m_, Coeff(1));
  } else if (support.size() == 1) {
    result = MonoEPoly::symbol(ring_, ESymbol{support[0].mult, support[0].mono});
  } else {
    // e_alpha = e_{a1}(pivot) * e_rest(rest) - sum over corrections, where
    // the corrections are the product-formula terms in which the pivot
    // multiplies at least one other argument.
    const AlphaEntry& pivot = support.back();
    std::vector<AlphaEntry> rest(support.begin(), support.end() - 1);
    const AlphaIndex rest_index = AlphaIndex::from_entries(m_, rest);

    std::vector<Monomial> joined;
    for (const auto& r : rest) joined.push_back(pivot.mono * r.mono);

    const std::uint32_t rows[] = {pivot.mult};
    std::vector<std::uint32_t> cols;
    for (const auto& r : rest) cols.push_back(r.mult);
    std::optional<std::uint64_t> cap;
    if (ambient_.is_finite()) cap = ambient_.size();

    std::vector<std::pair<AlphaIndex, Coeff>> corrections;
    std::vector<AlphaEntry> args;
    for_each_margin_table(rows, cols, cap, true, [&](const MarginTable& t) {
      args.clear();
      args.push_back({pivot.mono, t(1, 0)});
      for (std::size_t j = 0; j < rest.size(); ++j) args.push_back({rest[j].mono, t(0, j + 1)});
      for (std::size_t j = 0; j < rest.size(); ++j) args.push_back({joined[j], t(1, j + 1)});
      auto merged = merge_repeats(ring_, m_, args);
      if (!Ring::is_zero(merged.scalar)) corrections.emplace_back(std::move(merged.index), merged.scalar);
    });

    result = MonoEPoly::symbol(ring_, ESymbol{pivot.mult, pivot.mono}) * reduce_basis(rest_index);
    for (const auto& [index, scalar] : corrections) result -= reduce_basis(index).scaled(scalar);
  }
  return reduced_.try_emplace(alpha, std::move(result)).first->second;
}

MonoEPoly Rewriter::reduce(const MsfElement& x) {
  require_compatible(x);
  MonoEPoly out(ring_, m_);
  for (const auto& [alpha, c] : x.terms()) out += reduce_basis(alpha).scaled(c);
  return out;
}

const GenPoly& Rewriter::primitive_symbol(const ESymbol& s) {
  if (auto it = primitive_.find(s); it != primitive_.end()) return it->second;
  const auto [root, power] = primitive_decompose(s.mono);
  GenPoly result(ring_, m_);
  if (!ambient_.admits(s.order)) {
    // e_i vanishes for i > n
  } else if (power == 1) {
    result = GenPoly::symbol(ring_, ESymbol{s.order, root});
  } else {
    const EPoly pleth = plethysm_P(s.order, power);
    result = evaluate<GenPoly>(
        pleth,
        [&](std::uint32_t j) {
          return ambient_.admits(j) ? GenPoly::symbol(ring_, ESymbol{j, root}) : GenPoly(ring_, m_);
        },
        [&](const mpz_class& c) { return GenPoly::constant(ring_, m_, ring_.embed(c)); });
  }
  return primitive_.try_emplace(s, std::move(result)).first->second;
}

GenPoly Rewriter::to_primitive(const MonoEPoly& p) {
  if (!(p.ring() == ring_) || p.m() != m_) throw AmbientMismatch("symbol polynomial from another ring or m");
  GenPoly out(ring_, m_);
  for (const auto& [mono, c] : p.terms()) {
    GenPoly term = GenPoly::constant(ring_, m_, c);
    for (const auto& [sym, power] : mono.factors()) term = term * primitive_symbol(sym).pow(power);
    out += term;
  }
  return out;
}

MonoEPoly reduce_to_monomial_es(const MsfElement& x) { return Rewriter(x.ambient(), x.m(), x.ring()).reduce(x); }

GenPoly primitive_reduce(const MonoEPoly& p, Ambient ambient) {
  return Rewriter(ambient, p.m(), p.ring()).to_primitive(p);
}

GenPoly rewrite(const MsfElement& x) { return Rewriter(x.ambient(), x.m(), x.ring()).rewrite(x); }

template <class Alphabet>
MsfElement evaluate(const SymbolPoly<Alphabet>& g, Ambient ambient) {
  const Ring& ring = g.ring();
  const std::size_t m = g.m();
  std::map<ESymbol, std::vector<MsfElement>> powers;
  auto power_of = [&](const ESymbol& s, Exponent k) -> const MsfElement& {
    auto& cache = powers[s];
    if (cache.empty()) {
      cache.push_back(MsfElement::one(ambient, m, ring));
      cache.push_back(e_alpha(AlphaIndex::single(s.mono, s.order), ambient, ring, OnVanishing::Truncate));
    }
    while (cache.size() <= k) {
      MsfElement next = product(cache.back(), cache[1]);
      cache.push_back(std::move(next));
    }
    return cache[k];
  };

  MsfElement out(ambient, m, ring);
  for (const auto& [mono, c] : g.terms()) {
    MsfElement term = MsfElement::one(ambient, m, ring).scaled(c);
    for (const auto& [sym, p] : mono.factors()) {
      term = product(term, power_of(sym, p));
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

template MsfElement evaluate(const SymbolPoly<AnyMonomialSymbols>&, Ambient);
template MsfElement evaluate(const SymbolPoly<PrimitiveSymbols>&, Ambient);

MonoEPoly to_e1_symbols(const GenPoly& g) {
  const Ring& ring = g.ring();
  if (ring.kind() != RingKind::Rationals) throw std::invalid_argument("Newton elimination needs the rationals");
  const std::size_t m = g.m();

  // e_k(nu) = (1/k) sum_{i=1}^k (-1)^{i-1} e_{k-i}(nu) p_i(nu), p_i(nu) = e_1(nu^i)
  std::map<Monomial, std::vector<MonoEPoly>> table;
  auto e_of = [&](const Monomial& nu, std::uint32_t k) -> const MonoEPoly& {
    auto& es = table[nu];
    if (es.empty()) es.push_back(MonoEPoly::constant(ring, m, Coeff(1)));
    while (es.size() <= k) {
      const std::uint32_t r = static_cast<std::uint32_t>(es.size());
      MonoEPoly acc(ring, m);
      for (std::uint32_t i = 1; i <= r; ++i) {
        MonoEPoly t = es[r - i] * MonoEPoly::symbol(ring, ESymbol{1, nu.pow(i)});
        acc += (i % 2 == 1) ? t : t.scaled(Coeff(-1));
      }
      es.push_back(acc.scaled(Coeff(1, r)));
    }
    return es[k];
  };

  MonoEPoly out(ring, m);
  for (const auto& [mono, c] : g.terms()) {
    MonoEPoly term = MonoEPoly::constant(ring, m, c);
    for (const auto& [sym, p] : mono.factors()) term = term * e_of(sym.mono, sym.order).pow(p);
    out += term;
  }
  return out;
}

std::uint64_t count_generator_monomials(const Multidegree& a) {
  const std::size_t m = a.size();
  std::vector<Multidegree> degrees;  // multidegrees of admissible generators e_{i,nu}
  std::vector<Exponent> bound(a.entries().begin(), a.entries().end());
  for (const auto& nu : monomials_dividing(Monomial(bound))) {
    if (!is_primitive(nu)) continue;
    for (Exponent i = 1;; ++i) {
      Multidegree d = nu.multidegree().scaled(i);
      if (!d.divides(a)) break;
      degrees.push_back(std::move(d));
    }
  }
  std::vector<Exponent> left = bound;
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (std::all_of(left.begin(), left.end(), [](Exponent e) { return e == 0; })) {
      ++count;
      return;
    }
    if (idx == degrees.size()) return;
    self(self, idx + 1);
    const auto& d = degrees[idx];
    Exponent uses = 0;
    while (true) {
      bool fits = true;
      for (std::size_t i = 0; i < m; ++i) fits = fits && d[i] <= left[i];
      if (!fits) break;
      for (std::size_t i = 0; i < m; ++i) left[i] -= d[i];
      ++uses;
      self(self, idx + 1);
    }
    for (std::size_t i = 0; i < m; ++i) left[i] += d[i] * uses;
  };
  rec(rec, 0);
  return count;
}

}  // namespace msym
