#include "msym/polynomial.hpp"

#include "msym/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace msym {

Polynomial Polynomial::constant(Ring ring, std::size_t nvars, const Coeff& c) {
  Polynomial p(std::move(ring), nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::term(Ring ring, const Monomial& mono, const Coeff& c) {
  Polynomial p(std::move(ring), mono.nvars());
  p.add_term(mono, c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t nvars, std::size_t index) {
  return term(ring, Monomial::variable(nvars, index), Coeff(1));
}

Coeff Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Coeff(0) : it->second;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& mono, const Coeff& c) {
  if (mono.nvars() != nvars_) {
    throw std::invalid_argument("monomial has " + std::to_string(mono.nvars()) + " variables, polynomial " +
                                std::to_string(nvars_));
  }
  Coeff v = ring_.normalize(c);
  if (Ring::is_zero(v)) return;
  auto [it, inserted] = terms_.try_emplace(mono, v);
  if (!inserted) {
    it->second = ring_.add(it->second, v);
    if (Ring::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::require_compatible(const Polynomial& other) const {
  if (!(ring_ == other.ring_) || nvars_ != other.nvars_) {
    throw AmbientMismatch("polynomials over " + ring_.to_string() + "/" + std::to_string(nvars_) + " and " +
                          other.ring_.to_string() + "/" + std::to_string(other.nvars_) + " vars");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_compatible(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, ring_.neg(c));
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial r(a.ring_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Coeff c = a.ring_.mul(ca, cb);
      if (Ring::is_zero(c)) continue;
      Monomial prod = ma * mb;
      auto [it, inserted] = r.terms_.try_emplace(std::move(prod), c);
      if (!inserted) it->second = a.ring_.add(it->second, c);
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return Ring::is_zero(kv.second); });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial r(ring_, nvars_);
  Coeff s = ring_.normalize(c);
  if (Ring::is_zero(s)) return r;
  for (const auto& [mono, coeff] : terms_) r.add_term(mono, ring_.mul(coeff, s));
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, nvars_, Coeff(1));
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

namespace {

template <class MonoFormatter>
std::string format_terms(const Polynomial::TermMap& terms, MonoFormatter&& fmt) {
  if (terms.empty()) return "0";
  std::string s;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [mono, c] = *it;
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
      s += fmt(mono);
    }
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  return format_terms(terms_, [](const Monomial& m) { return m.to_string(); });
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) throw std::invalid_argument("transposition slot out of range");
  auto p = identity(n);
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> v;
  v.reserve(images.size());
  for (auto i : images) {
    if (i == 0) throw std::invalid_argument("permutation images are 1-based");
    v.push_back(i - 1);
  }
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutations of different degree");
  std::vector<std::size_t> v(a.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = a(b(j));
  return Permutation(std::move(v));
}

NPoly::NPoly(std::size_t n, std::size_t m, Polynomial poly) : n_(n), m_(m), poly_(std::move(poly)) {
  if (poly_.nvars() != n * m) throw std::invalid_argument("NPoly needs n*m variables");
}

NPoly NPoly::constant(Ring ring, std::size_t n, std::size_t m, const Coeff& c) {
  return NPoly(n, m, Polynomial::constant(std::move(ring), n * m, c));
}

NPoly NPoly::variable(Ring ring, std::size_t n, std::size_t m, std::size_t i, std::size_t j) {
  if (i < 1 || i > m || j < 1 || j > n) throw std::invalid_argument("x_i(j) index out of range");
  return NPoly(n, m, Polynomial::variable(std::move(ring), n * m, (j - 1) * m + (i - 1)));
}

void NPoly::require_compatible(const NPoly& other) const {
  if (n_ != other.n_ || m_ != other.m_ || !(ring() == other.ring())) {
    throw AmbientMismatch("A(" + std::to_string(n_) + "," + std::to_string(m_) + ") over " + ring().to_string() +
                          " vs A(" + std::to_string(other.n_) + "," + std::to_string(other.m_) + ") over " +
                          other.ring().to_string());
  }
}

NPoly& NPoly::operator+=(const NPoly& other) {
  require_compatible(other);
  poly_ += other.poly_;
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& other) {
  require_compatible(other);
  poly_ -= other.poly_;
  return *this;
}

NPoly operator*(const NPoly& a, const NPoly& b) {
  a.require_compatible(b);
  return NPoly(a.n_, a.m_, a.poly_ * b.poly_);
}

NPoly& NPoly::operator*=(const NPoly& other) { return *this = *this * other; }

std::string NPoly::to_string() const {
  return format_terms(poly_.terms(), [this](const Monomial& x) {
    std::string s;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Exponent e = x[j * m_ + i];
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1) + "(" + std::to_string(j + 1) + ")";
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  });
}

Multidegree slot_multidegree(const Monomial& x, std::size_t m) {
  std::vector<Exponent> a(m, 0);
  for (std::size_t k = 0; k < x.nvars(); ++k) a[k % m] += x[k];
  return Multidegree(std::move(a));
}

NPoly subst_slot(const MPoly& f, std::size_t j, std::size_t n) {
  if (j < 1 || j > n) throw std::invalid_argument("slot " + std::to_string(j) + " outside 1.." + std::to_string(n));
  const std::size_t m = f.nvars();
  NPoly out(f.ring(), n, m);
  Polynomial p(f.ring(), n * m);
  for (const auto& [mono, c] : f.terms()) {
    std::vector<Exponent> e(n * m, 0);
    for (std::size_t i = 0; i < m; ++i) e[(j - 1) * m + i] = mono[i];
    p.add_term(Monomial(std::move(e)), c);
  }
  return NPoly(n, m, std::move(p));
}

Monomial act_on_monomial(const Permutation& sigma, const Monomial& x, std::size_t m) {
  const std::size_t n = sigma.size();
  if (x.nvars() != n * m) throw std::invalid_argument("permutation degree does not match the slot count");
  std::vector<Exponent> e(n * m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t target = sigma(j);
    for (std::size_t i = 0; i < m; ++i) e[target * m + i] = x[j * m + i];
  }
  return Monomial(std::move(e));
}

NPoly sn_act(const Permutation& sigma, const NPoly& p) {
  if (sigma.size() != p.n()) throw std::invalid_argument("permutation degree does not match n");
  Polynomial out(p.ring(), p.n() * p.m());
  for (const auto& [x, c] : p.terms()) out.add_term(act_on_monomial(sigma, x, p.m()), c);
  return NPoly(p.n(), p.m(), std::move(out));
}

NPoly multidegree_component(const NPoly& p, const Multidegree& a) {
  Polynomial out(p.ring(), p.n() * p.m());
  if (a.size() != p.m()) return NPoly(p.n(), p.m(), std::move(out));
  for (const auto& [x, c] : p.terms()) {
    if (slot_multidegree(x, p.m()) == a) out.add_term(x, c);
  }
  return NPoly(p.n(), p.m(), std::move(out));
}

namespace {

class NPolyParser {
 public:
  NPolyParser(std::string_view text, const Ring& ring, std::size_t n, std::size_t m)
      : text_(text), ring_(ring), n_(n), m_(m) {}

  NPoly parse() {
    NPoly result(ring_, n_, m_);
    skip_ws();
    if (text_.empty()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      result += parse_term(negative);
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  ParseError error(const std::string& what) const {
    return ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  std::size_t parse_uint() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw error("expected digits");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  NPoly parse_term(bool negative) {
    Coeff c(negative ? -1 : 1);
    std::vector<Exponent> exps(n_ * m_, 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        c *= ring_.parse_coeff(text_.substr(start, pos_ - start));
      } else if (peek() == 'x') {
        ++pos_;
        std::size_t i = parse_uint();
        skip_ws();
        if (peek() != '(') throw error("expected '('");
        ++pos_;
        std::size_t j = parse_uint();
        if (peek() != ')') throw error("expected ')'");
        ++pos_;
        Exponent e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<Exponent>(parse_uint());
        }
        if (i < 1 || i > m_ || j < 1 || j > n_) throw error("variable index out of range");
        exps[(j - 1) * m_ + (i - 1)] += e;
      } else {
        throw error("expected a coefficient or a variable");
      }
      any = true;
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) throw error("empty term");
    Polynomial p(ring_, n_ * m_);
    p.add_term(Monomial(std::move(exps)), c);
    return NPoly(n_, m_, std::move(p));
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t n_;
  std::size_t m_;
  std::size_t pos_ = 0;
};

}  // namespace

NPoly parse_npoly(std::string_view text, const Ring& ring, std::size_t n, std::size_t m) {
  return NPolyParser(text, ring, n, m).parse();
}

}  // namespace msym
