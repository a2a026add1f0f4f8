#pragma once

#include "msym/coeff_ring.hpp"
#include "msym/msf.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace msym {

/// Desk-scale limits for the differential suite.
struct VerifyBounds {
  static constexpr std::size_t max_n = 4;
  static constexpr std::size_t max_m = 3;
  static constexpr std::uint64_t max_total_degree = 6;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string first_failure;
};

struct VerifyReport {
  std::size_t n;
  std::size_t m;
  std::uint64_t max_total_degree;
  Ring ring;
  std::vector<PropertyResult> properties;

  bool pass() const;
};

/// Basis indices with |alpha| <= n and total degree in 1..max_total.
std::vector<AlphaIndex> basis_indices(std::size_t n, std::size_t m, std::uint64_t max_total);

PropertyResult check_basis(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring);
PropertyResult check_homomorphism(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring);
PropertyResult check_round_trip(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring);
PropertyResult check_relation_vanishing(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring);
PropertyResult check_freeness_count(std::size_t m, std::uint64_t max_total);

/// Runs every property. Throws std::invalid_argument outside VerifyBounds.
VerifyReport verify(std::size_t n, std::size_t m, std::uint64_t max_total, const Ring& ring);

}  // namespace msym
