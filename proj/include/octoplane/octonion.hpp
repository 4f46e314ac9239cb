#pragma once

#include "octoplane/rational.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace octoplane {

/// Eight-dimensional composition algebra obtained by Cayley-Dickson doubling
/// of the quaternions: (a,b)(c,d) = (ac + mu conj(d) b, d a + b conj(c)).
/// mu = -1 gives the octonions O, mu = +1 the split octonions Os.
/// Basis: i0 = 1, i1..i3 quaternionic, i4 = (0,1), i_{4+k} = i_k i4.
class CDAlgebra {
 public:
  struct Entry {
    std::uint8_t index;
    std::int8_t sign;
  };

  static const CDAlgebra& octonions();
  static const CDAlgebra& split_octonions();
  static const CDAlgebra& with_mu(int mu);

  int mu() const { return mu_; }
  bool is_division() const { return mu_ < 0; }
  /// "O" or "Os"
  std::string name() const { return mu_ < 0 ? "O" : "Os"; }

  /// i_a * i_b = sign * i_index
  Entry product(std::size_t a, std::size_t b) const { return table_[a][b]; }
  /// Norm of basis element i_k: +1 or -1.
  int metric(std::size_t k) const { return metric_[k]; }

 private:
  explicit CDAlgebra(int mu);

  int mu_;
  std::array<std::array<Entry, 8>, 8> table_{};
  std::array<int, 8> metric_{};
};

class AlgElement {
 public:
  explicit AlgElement(const CDAlgebra& alg) : alg_(&alg) {}
  AlgElement(const CDAlgebra& alg, std::array<Rational, 8> coords) : alg_(&alg), x_(std::move(coords)) {}

  static AlgElement unit(const CDAlgebra& alg, std::size_t k);
  static AlgElement scalar(const CDAlgebra& alg, const Rational& s);

  const CDAlgebra& algebra() const { return *alg_; }
  const Rational& operator[](std::size_t k) const { return x_[k]; }
  Rational& operator[](std::size_t k) { return x_[k]; }
  const std::array<Rational, 8>& coords() const { return x_; }
  const Rational& real() const { return x_[0]; }
  bool is_zero() const;

  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator-() const;
  AlgElement operator*(const AlgElement& o) const;  // algebra product
  AlgElement operator*(const Rational& s) const;
  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);

  bool operator==(const AlgElement& o) const { return alg_ == o.alg_ && x_ == o.x_; }

 private:
  const CDAlgebra* alg_;
  std::array<Rational, 8> x_{};
};

inline AlgElement operator*(const Rational& s, const AlgElement& a) { return a * s; }

AlgElement mul(const AlgElement& a, const AlgElement& b);
AlgElement conj(const AlgElement& a);
/// ||x||^2 = Re(conj(x) x); indefinite with signature (4,4) over Os.
Rational norm(const AlgElement& a);
/// <x,y> = conj(x) y + conj(y) x, so <x,x> = 2 norm(x).
Rational inner(const AlgElement& a, const AlgElement& b);
/// (xy)z - x(yz)
AlgElement associator(const AlgElement& x, const AlgElement& y, const AlgElement& z);

/// Throws std::invalid_argument when a and b live in different algebras.
void require_same_algebra(const AlgElement& a, const AlgElement& b);

}  // namespace octoplane
