#pragma once

#include "octoplane/jordan.hpp"
#include "octoplane/vspace.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace octoplane {

class NotVeronese : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A chart point whose image fails the Veronese conditions, or a point that
/// falls outside all three charts (possible only over Os).
class DegenerateChart : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two points (lines) whose Freudenthal cross vanishes; only happens over Os.
class DegeneratePair : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TraceZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ver-1: l1 ~x1 = x2 x3 (and cyclic); Ver-2: |x1|^2 = l2 l3 (and cyclic).
bool is_veronese(const VElement& w);
bool is_veronese(const AlgElement& x1, const AlgElement& x2, const AlgElement& x3, const Rational& l1,
                 const Rational& l2, const Rational& l3);

/// Element of V that satisfies the Veronese conditions; checked on construction.
class VeroneseVector {
 public:
  explicit VeroneseVector(VElement w);
  const VElement& value() const { return w_; }
  const CDAlgebra& algebra() const { return w_.algebra(); }
  bool operator==(const VeroneseVector& o) const { return w_ == o.w_; }

 private:
  VElement w_;
};

/// beta(w1, w2) = sum_nu <x_nu, x'_nu> + l_nu l'_nu  (equals tr(X o Y)).
Rational beta(const VElement& a, const VElement& b);
/// Hyperbolic form beta(w1, c w2 c) with c = diag(1, 1, -1): the x1 and x2
/// terms (third row/column of the Jordan matrix) change sign.
Rational beta_minus(const VElement& a, const VElement& b);
/// Sign flip on the x3 and l3 terms only. Not a polarity of the plane; kept
/// for comparison with the hyperbolic form above.
Rational beta_flip_slot3(const VElement& a, const VElement& b);

enum class Polarity { elliptic, hyperbolic };
std::string to_string(Polarity p);
Polarity parse_polarity(const std::string& s);

Rational form(Polarity kind, const VElement& a, const VElement& b);
/// The map w -> c w c with c = diag(1, 1, -1); an involution preserving the
/// Veronese set. beta_minus(a, b) = beta(a, hyperbolic_twist(b)).
VElement hyperbolic_twist(const VElement& w);

/// A point Rw of the plane with a canonical representative: trace 1 when the
/// trace is nonzero, else first nonzero lambda equal to 1, else first nonzero
/// coordinate equal to 1.
class ProjPoint {
 public:
  /// Throws NotVeronese for a zero or non-Veronese vector.
  explicit ProjPoint(const VElement& w);
  const VElement& representative() const { return rep_; }
  const CDAlgebra& algebra() const { return rep_.algebra(); }
  bool operator==(const ProjPoint& o) const { return rep_ == o.rep_; }

 private:
  VElement rep_;
};

/// Rescales w to trace 1; throws TraceZero when l1 + l2 + l3 = 0.
VElement normalize_trace_one(const VElement& w);

/// Line given as the orthogonal complement of its pole under the chosen form.
struct ProjLine {
  ProjPoint pole;
  Polarity kind = Polarity::elliptic;
  bool operator==(const ProjLine& o) const { return pole == o.pole && kind == o.kind; }
};

struct Finite {
  AlgElement x, y;
};
struct Slope {
  AlgElement s;
};
struct Infinity {};
using AffineChartPoint = std::variant<Finite, Slope, Infinity>;

struct SlopeIntercept {
  AlgElement s, t;
};
struct Vertical {
  AlgElement c;
};
struct LineAtInfinity {};
using AffineChartLine = std::variant<SlopeIntercept, Vertical, LineAtInfinity>;

/// (x,y) -> R(x, ~y, y ~x; |y|^2, |x|^2, 1), (s) -> R(0,0,s; |s|^2,1,0), (inf) -> R(0,0,0;1,0,0).
ProjPoint embed_point(const AffineChartPoint& chart, const CDAlgebra& alg);
/// Elliptic poles: [s,t] -> (~s t, -~t, -s; 1, |s|^2, |t|^2), [c] -> (-c,0,0; 0,1,|c|^2), [inf] -> (0,0,0;0,0,1).
ProjLine embed_line(const AffineChartLine& chart, const CDAlgebra& alg);
/// Inverse of embed_point. Throws DegenerateChart if no chart applies.
AffineChartPoint chart_of(const ProjPoint& p);

bool incident(const ProjPoint& p, const ProjLine& l);
ProjLine polarity(const ProjPoint& p, Polarity kind = Polarity::elliptic);
ProjPoint polarity_inverse(const ProjLine& l);

/// (x1,x2,x3; l1,l2,l3) -> (x2,x3,x1; l2,l3,l1)
VElement triality(const VElement& w);
VeroneseVector triality(const VeroneseVector& w);

/// Linear extension of the affine translation (x,y) -> (x+a, y+b).
VElement translate(const AlgElement& a, const AlgElement& b, const VElement& w);
VeroneseVector translate(const AlgElement& a, const AlgElement& b, const VeroneseVector& w);
/// The translation exactly as printed in the source display (lambda updates
/// use <~x2, a> and <~x1, a>); used only by the formula audit.
VElement translate_as_printed(const AlgElement& a, const AlgElement& b, const VElement& w);

/// Line through two distinct points, via the Freudenthal cross of their
/// Jordan images. Throws std::invalid_argument for equal points and
/// DegeneratePair when the cross vanishes.
ProjLine join(const ProjPoint& p, const ProjPoint& q, Polarity kind = Polarity::elliptic);
/// Intersection of two distinct lines (dual of join).
ProjPoint meet(const ProjLine& l, const ProjLine& m);

}  // namespace octoplane
