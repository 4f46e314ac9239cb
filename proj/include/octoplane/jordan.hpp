#pragma once

#include "octoplane/vspace.hpp"

#include <array>
#include <string>

namespace octoplane {

/// Hermiticity twist: X = gamma conj(X)^T gamma with gamma = diag(g1, g2, g3).
using Gamma = std::array<int, 3>;
inline constexpr Gamma kGammaEuclidean{1, 1, 1};
inline constexpr Gamma kGammaLorentzian{1, 1, -1};

/// Parses "+++" / "++-" style strings.
Gamma parse_gamma(const std::string& s);
std::string to_string(const Gamma& g);

/// 3x3 gamma-Hermitian matrix over a composition algebra, stored as
///
///   ( l1        x3        g1g3 ~x2 )
///   ( g1g2 ~x3  l2        x1       )
///   ( x2        g2g3 ~x1  l3       )
///
/// where ~ is conjugation. Hermiticity holds by construction.
class JordanElement {
 public:
  explicit JordanElement(const CDAlgebra& alg, Gamma gamma = kGammaEuclidean);
  JordanElement(std::array<Rational, 3> lambda, std::array<AlgElement, 3> x, Gamma gamma = kGammaEuclidean);

  static JordanElement identity(const CDAlgebra& alg, Gamma gamma = kGammaEuclidean);
  /// Diagonal idempotent E_ii (i = 0, 1, 2).
  static JordanElement diagonal_idempotent(const CDAlgebra& alg, std::size_t i, Gamma gamma = kGammaEuclidean);
  static JordanElement from_coords(const CDAlgebra& alg, const RatVector& coords, Gamma gamma = kGammaEuclidean);

  const CDAlgebra& algebra() const { return x_[0].algebra(); }
  const Gamma& gamma() const { return gamma_; }
  const Rational& lambda(std::size_t i) const { return lambda_[i]; }
  const AlgElement& x(std::size_t i) const { return x_[i]; }

  /// 27 coordinates in the (l1, l2, l3, x1, x2, x3) layout.
  RatVector coords() const;
  bool is_zero() const;

  JordanElement operator+(const JordanElement& o) const;
  JordanElement operator-(const JordanElement& o) const;
  JordanElement operator*(const Rational& s) const;
  bool operator==(const JordanElement& o) const;

 private:
  std::array<Rational, 3> lambda_{};
  std::array<AlgElement, 3> x_;
  Gamma gamma_;
};

enum class RankClass { rank0 = 0, rank1 = 1, rank2 = 2, rank3 = 3 };

/// Throws std::invalid_argument on mismatched algebra or gamma.
void require_compatible(const JordanElement& a, const JordanElement& b);

/// X o Y = (XY + YX)/2, computed on the expanded 3x3 matrices.
JordanElement jordan_mul(const JordanElement& a, const JordanElement& b);
JordanElement jordan_square(const JordanElement& a);

Rational trace(const JordanElement& a);
/// tr(X o Y), evaluated from components.
Rational trace_form(const JordanElement& a, const JordanElement& b);
/// (X, Y) = tr(X o Y) / 2
Rational bilinear_form(const JordanElement& a, const JordanElement& b);
/// Q(X) = tr(X^2) / 2
Rational quadratic_form(const JordanElement& a);

/// X*Y = X o Y - (X tr Y + Y tr X)/2 + (tr X tr Y - tr(X o Y)) I/2, so that X*X = X#.
JordanElement freudenthal(const JordanElement& a, const JordanElement& b);
/// (X, Y, Z) = tr(X o (Y*Z)); fully symmetric.
Rational trilinear(const JordanElement& a, const JordanElement& b, const JordanElement& c);
/// det X = (X, X, X) / 3
Rational det(const JordanElement& a);
/// l1 l2 l3 - l1|x1|^2 - l2|x2|^2 - l3|x3|^2 + 2 Re((x1 x2) x3). Requires gamma = (+,+,+).
Rational det_expanded(const JordanElement& a);

/// Adjoint map. Closed-form entries for gamma = (+,+,+), X*X otherwise.
JordanElement sharp(const JordanElement& a);

RankClass rank_of(const JordanElement& a);
bool is_idempotent(const JordanElement& a);

/// Linear bijection V -> J3 (gamma = (+,+,+)).
JordanElement veronese_to_jordan(const VElement& w);
VElement jordan_to_veronese(const JordanElement& a);

}  // namespace octoplane
