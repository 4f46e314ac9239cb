#pragma once

#include "octoplane/matrix.hpp"

#include <stdexcept>
#include <string>

namespace octoplane {

enum class EliminationMethod {
  automatic,     // Bareiss for small systems, multi-modular otherwise
  bareiss,       // dense fraction-free elimination over Z
  multimodular,  // RREF mod p, CRT + rational reconstruction, exact check
};

/// Kernel basis of m. One vector per non-pivot column f, equal to 1 at f and
/// 0 at every other non-pivot column; the result is the unique such basis, so
/// it does not depend on the method used.
std::vector<RatVector> nullspace(const RatMatrix& m, EliminationMethod method = EliminationMethod::automatic);
std::vector<RatVector> nullspace(const SparseRatMatrix& m,
                                 EliminationMethod method = EliminationMethod::automatic);

std::size_t rank(const RatMatrix& m, EliminationMethod method = EliminationMethod::automatic);
std::size_t rank(const SparseRatMatrix& m, EliminationMethod method = EliminationMethod::automatic);

/// Rank modulo a large prime: a lower bound for the rank over Q that is
/// attained for all but finitely many primes.
std::size_t rank_mod_prime(const SparseRatMatrix& m, std::size_t prime_index = 0);

struct Signature {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  long character() const { return static_cast<long>(positives) - static_cast<long>(negatives); }
  std::size_t dimension() const { return positives + negatives + zeros; }
  bool operator==(const Signature&) const = default;
};

/// Sylvester inertia by symmetric Gaussian congruence. Throws
/// std::invalid_argument if m is not square and symmetric.
Signature symmetric_signature(const RatMatrix& m);

class NotInSpan : public std::runtime_error {
 public:
  explicit NotInSpan(const std::string& what) : std::runtime_error(what) {}
};

/// Reduced row echelon form of the span of a set of vectors.
struct Echelon {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return rows.size(); }
};

Echelon row_echelon(const std::vector<RatVector>& vectors);

/// Expresses vectors in a fixed linearly independent basis. Construction
/// echelonizes once; each query is a lookup at the pivot columns followed by
/// an exact recomposition check.
class SpanSolver {
 public:
  /// Throws std::invalid_argument if the basis is dependent or ragged.
  explicit SpanSolver(std::vector<RatVector> basis);

  /// Coefficients c with sum c_i basis_i == target. Throws NotInSpan.
  RatVector coordinates(const RatVector& target) const;
  bool contains(const RatVector& target) const;
  std::size_t dimension() const { return dim_; }
  std::size_t ambient() const { return ambient_; }

 private:
  std::size_t dim_ = 0;
  std::size_t ambient_ = 0;
  std::vector<std::size_t> pivots_;
  std::vector<SparseRow> echelon_;  // sparse RREF rows
  bool identity_transform_ = true;  // basis was already in RREF
  std::vector<RatVector> transform_;  // echelon_ = transform_ * basis

  bool try_coordinates(const RatVector& target, RatVector& echelon_coords) const;
};

RatVector solve_in_span(const std::vector<RatVector>& basis, const RatVector& target);

/// True iff span(a) == span(b), decided by ranks.
bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b);
/// True iff span(inner) is contained in span(outer).
bool span_contains(const std::vector<RatVector>& outer, const std::vector<RatVector>& inner);

}  // namespace octoplane
