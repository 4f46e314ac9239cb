#pragma once

// Modular elimination backing the exact nullspace/rank routines.

#include "octoplane/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace octoplane::modular {

/// Primitive integer row: coprime entries, sorted column indices.
struct IntRow {
  std::vector<std::uint32_t> cols;
  std::vector<Integer> vals;
};

/// k-th prime below 2^28, descending. Deterministic.
std::uint32_t prime(std::size_t k);

struct ModRref {
  std::uint32_t p = 0;
  std::vector<std::size_t> pivots;               // ascending
  std::vector<std::vector<std::uint32_t>> rows;  // rows[r] has a 1 at pivots[r]
  std::vector<std::size_t> source_rows;          // input rows that produced a pivot
};

/// Reduced row echelon form of the rows mod p. Stops early at full column rank.
ModRref rref_mod(const std::vector<IntRow>& rows, std::size_t cols, std::uint32_t p);

/// n/d with |n|, |d| <= sqrt(m/2) and n = a*d (mod m), if one exists.
std::optional<Rational> reconstruct(const Integer& a, const Integer& m);

}  // namespace octoplane::modular
