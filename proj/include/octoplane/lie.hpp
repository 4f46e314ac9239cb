#pragma once

#include "octoplane/jordan.hpp"
#include "octoplane/linalg.hpp"
#include "octoplane/veronese.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace octoplane {

/// Linear map on the ambient coordinate space (8 for algebra maps, 27 for
/// maps of V = J3, 24 for triality triples stored block-diagonally).
struct LinearEndo {
  RatMatrix matrix;

  RatVector apply(const RatVector& v) const { return matrix * v; }
  /// Row-major entries.
  const std::vector<Rational>& entries() const { return matrix.entries(); }
  bool operator==(const LinearEndo&) const = default;
};

LinearEndo bracket(const LinearEndo& a, const LinearEndo& b);

/// Three 8x8 maps with T1(xy) = T2(x) y + x T3(y).
struct TrialityTriple {
  LinearEndo t1, t2, t3;
};
/// Splits a block-diagonal 24x24 triality basis element.
TrialityTriple split_triple(const LinearEndo& e);

class NotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional Lie algebra of matrices, with structure constants,
/// Killing form and the real-form name read off from (dim, character).
class LieSubalgebra {
 public:
  /// Computes structure constants, Killing form and signature. Throws
  /// NotClosed if some bracket leaves the span, std::invalid_argument for an
  /// empty or dependent basis.
  LieSubalgebra(std::string label, std::vector<LinearEndo> basis, const CDAlgebra* algebra = nullptr);

  const std::string& label() const { return label_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<LinearEndo>& basis() const { return basis_; }
  const CDAlgebra* algebra() const { return algebra_; }
  /// [b_i, b_j] = sum_k c(i, j, k) b_k
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim() + j) * dim() + k];
  }
  const RatMatrix& killing() const { return killing_; }
  const Signature& signature() const { return signature_; }
  long character() const { return signature_.character(); }
  const std::string& identified_name() const { return name_; }
  bool closed() const { return true; }

  /// Basis vectors flattened row-major.
  std::vector<RatVector> flat_basis() const;
  /// Coordinates of an endomorphism in this basis; throws NotInSpan.
  RatVector coordinates(const LinearEndo& e) const;
  bool contains(const LinearEndo& e) const;
  /// Reduced row echelon form of the flattened basis.
  Echelon echelon() const;
  /// FNV-1a digest of the echelonized basis, as 16 hex digits.
  std::string basis_digest() const;

 private:
  std::string label_;
  std::size_t ambient_ = 0;
  std::vector<LinearEndo> basis_;
  const CDAlgebra* algebra_ = nullptr;
  std::vector<Rational> structure_;
  RatMatrix killing_;
  Signature signature_;
  std::string name_;
  std::optional<SpanSolver> solver_;
};

/// Real-form name for (dim, character), or "unidentified(dim, chi)".
std::string identify(std::size_t dim, long character);

/// Rebuilds the algebra from a random invertible recombination of its basis.
LieSubalgebra remixed(const LieSubalgebra& sub, std::uint64_t seed);

/// Skew maps for the algebra's inner product: so(8) or so(4,4).
LieSubalgebra so_of_form(const CDAlgebra& alg);
/// Derivations T(xy) = T(x)y + xT(y).
LieSubalgebra derivations_of_algebra(const CDAlgebra& alg);
/// Triality triples, stored as block-diagonal 24x24 matrices diag(T1, T2, T3).
LieSubalgebra triality_algebra(const CDAlgebra& alg);
/// The T1 = T2 = T3 slice of the triality algebra, as 8x8 maps.
LieSubalgebra triality_diagonal(const CDAlgebra& alg);
/// Projection (T1, T2, T3) -> T1 of every basis element.
std::vector<LinearEndo> triality_projection(const LieSubalgebra& tri);

/// Derivations D(X o Y) = DX o Y + X o DY of the gamma-twisted Jordan algebra.
LieSubalgebra jordan_derivations(const CDAlgebra& alg, Gamma gamma = kGammaEuclidean);
/// Maps L with (LX,Y,Z) + (X,LY,Z) + (X,Y,LZ) = 0.
LieSubalgebra det_preserving_algebra(const CDAlgebra& alg);

struct ConeTangentResult {
  std::vector<LinearEndo> basis;
  std::size_t samples_per_batch = 0;
  /// Solution dimension after each cumulative batch (rank taken mod a large
  /// prime; the final basis is exact).
  std::vector<std::size_t> batch_dims;
  /// True when the dimension never stabilized between consecutive batches.
  bool under_constrained = false;
  /// True when the first batch alone was not enough.
  bool first_batch_insufficient() const { return batch_dims.size() > 1 && batch_dims.front() != batch_dims.back(); }
};
/// Maps L with (Lw)*w = 0 for random Veronese w. Batches of sample_count
/// samples are added until the solution dimension is unchanged by a fresh
/// batch. Throws std::invalid_argument for sample_count < 30.
ConeTangentResult cone_tangent_algebra(const CDAlgebra& alg, std::size_t sample_count = 60, std::uint64_t seed = 0);
/// Removes the identity direction: the trace-zero part of the cone algebra.
std::vector<LinearEndo> trace_zero_part(const std::vector<LinearEndo>& basis);

enum class FormKind { beta, beta_minus, beta_flip_slot3 };
/// Elements L of parent with form(Lw, w') + form(w, Lw') = 0.
LieSubalgebra form_preserving_subalgebra(const LieSubalgebra& parent, FormKind form);
/// Elements L of parent with L(X) = 0.
LieSubalgebra stabilizer_subalgebra(const LieSubalgebra& parent, const JordanElement& x);

/// Elements L of parent fixing each point Rw projectively: L w in R w.
LieSubalgebra projective_stabilizer(const LieSubalgebra& parent, const std::vector<VElement>& points,
                                    const std::string& label);

/// Gram matrix of the chosen form on the 27 coordinates.
RatMatrix form_gram(const CDAlgebra& alg, FormKind form);

}  // namespace octoplane
