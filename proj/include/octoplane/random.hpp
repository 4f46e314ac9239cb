#pragma once

#include "octoplane/jordan.hpp"
#include "octoplane/veronese.hpp"

#include <cstdint>
#include <random>

namespace octoplane {

/// Seeded generator for small exact test data. Identical seeds give identical streams.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| <= bound and q in {1, 2, 3}.
  Rational rational(long bound = 3);
  Rational nonzero_rational(long bound = 3);
  AlgElement alg_element(const CDAlgebra& alg, long bound = 2);
  VElement v_element(const CDAlgebra& alg, long bound = 2);
  JordanElement jordan_element(const CDAlgebra& alg, Gamma gamma = kGammaEuclidean, long bound = 2);

  /// Random nonzero Veronese vector: mostly finite chart points, sometimes
  /// slope or infinity points, always multiplied by a random nonzero scalar.
  VElement veronese_vector(const CDAlgebra& alg, long bound = 2);
  ProjPoint point(const CDAlgebra& alg, long bound = 2);
  AffineChartLine chart_line(const CDAlgebra& alg, long bound = 2);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace octoplane
