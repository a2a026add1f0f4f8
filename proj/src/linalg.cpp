#include "msym/linalg.hpp"

#include <set>
#include <stdexcept>

namespace msym::linalg {

std::size_t rank(Matrix rows, const Ring& ring) {
  if (!ring.is_field()) throw std::invalid_argument("rank needs a field, got " + ring.to_string());
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (auto& row : rows) {
    for (auto& v : row) v = ring.normalize(v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && Ring::is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Coeff inv = ring.inverse(rows[r][c]);
    for (auto& v : rows[r]) v = ring.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || Ring::is_zero(rows[i][c])) continue;
      const Coeff f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = ring.sub(rows[i][k], ring.mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

bool spans_integer_lattice(Matrix rows, std::size_t dim) {
  for (const auto& row : rows) {
    if (row.size() != dim) throw std::invalid_argument("row length differs from the lattice dimension");
    for (const auto& v : row) {
      if (v.get_den() != 1) throw std::invalid_argument("non-integer entry in lattice basis");
    }
  }
  std::vector<std::vector<mpz_class>> m;
  for (const auto& row : rows) {
    std::vector<mpz_class> r;
    for (const auto& v : row) r.push_back(v.get_num());
    m.push_back(std::move(r));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim; ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) best = i;
      }
      if (best == m.size()) return false;  // zero column: rank deficient
      std::swap(m[r], m[best]);
      bool reduced = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t k = c; k < dim; ++k) m[i][k] -= q * m[r][k];
        if (m[i][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (abs(m[r][c]) != 1) return false;
    ++r;
  }
  return true;
}

Matrix coefficient_rows(const std::vector<NPoly>& polys) {
  std::set<Monomial> support;
  for (const auto& p : polys) {
    for (const auto& [x, c] : p.terms()) support.insert(x);
  }
  Matrix rows;
  for (const auto& p : polys) {
    std::vector<Coeff> row;
    row.reserve(support.size());
    for (const auto& x : support) row.push_back(p.poly().coefficient(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace msym::linalg
