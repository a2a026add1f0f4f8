#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/polynomial.hpp"

#include <vector>

namespace msym::linalg {

using Matrix = std::vector<std::vector<Coeff>>;

/// Rank by Gaussian elimination. Requires a field (Q or Z/p).
std::size_t rank(Matrix rows, const Ring& ring);

/// Whether the integer rows generate all of Z^dim (Hermite reduction with
/// unit pivots). Entries must be integers.
bool spans_integer_lattice(Matrix rows, std::size_t dim);

/// Coordinates of polynomials against the union of their monomial supports.
Matrix coefficient_rows(const std::vector<NPoly>& polys);

}  // namespace msym::linalg
