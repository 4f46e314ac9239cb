#pragma once

#include "octoplane/octonion.hpp"

#include <array>

namespace octoplane {

/// Number of real coordinates of V = A^3 x R^3 (and of the Jordan algebra).
inline constexpr std::size_t kVDim = 27;

/// Coordinate index helpers for the 27-vector layout (l1, l2, l3, x1[0..7], x2[0..7], x3[0..7]).
constexpr std::size_t lambda_index(std::size_t nu) { return nu; }
constexpr std::size_t x_index(std::size_t nu, std::size_t k) { return 3 + 8 * nu + k; }

/// An arbitrary element (x1, x2, x3; l1, l2, l3) of V, not necessarily Veronese.
class VElement {
 public:
  explicit VElement(const CDAlgebra& alg) : x_{AlgElement(alg), AlgElement(alg), AlgElement(alg)}, alg_(&alg) {}
  VElement(std::array<AlgElement, 3> x, std::array<Rational, 3> lambda);

  static VElement from_coords(const CDAlgebra& alg, const RatVector& coords);

  const CDAlgebra& algebra() const { return *alg_; }
  const AlgElement& x(std::size_t nu) const { return x_[nu]; }
  AlgElement& x(std::size_t nu) { return x_[nu]; }
  const Rational& lambda(std::size_t nu) const { return lambda_[nu]; }
  Rational& lambda(std::size_t nu) { return lambda_[nu]; }
  Rational lambda_sum() const { return lambda_[0] + lambda_[1] + lambda_[2]; }

  RatVector coords() const;
  bool is_zero() const;

  VElement operator+(const VElement& o) const;
  VElement operator-(const VElement& o) const;
  VElement operator*(const Rational& s) const;
  bool operator==(const VElement& o) const;

 private:
  std::array<AlgElement, 3> x_;
  std::array<Rational, 3> lambda_{};
  const CDAlgebra* alg_;
};

}  // namespace octoplane
