#include "octoplane/jordan.hpp"

#include <stdexcept>
#include <vector>

namespace octoplane {
namespace {

using Matrix3 = std::vector<std::vector<AlgElement>>;

// Off-diagonal slot layout: x1 at (1,2), x2 at (2,0), x3 at (0,1).
constexpr std::size_t kRow[3] = {1, 2, 0};
constexpr std::size_t kCol[3] = {2, 0, 1};

Matrix3 expand(const JordanElement& a) {
  const CDAlgebra& alg = a.algebra();
  const Gamma& g = a.gamma();
  Matrix3 m(3, std::vector<AlgElement>(3, AlgElement(alg)));
  for (std::size_t i = 0; i < 3; ++i) m[i][i] = AlgElement::scalar(alg, a.lambda(i));
  for (std::size_t nu = 0; nu < 3; ++nu) {
    const std::size_t r = kRow[nu], c = kCol[nu];
    m[r][c] = a.x(nu);
    m[c][r] = conj(a.x(nu)) * Rational(g[r] * g[c]);
  }
  return m;
}

Matrix3 product(const Matrix3& a, const Matrix3& b) {
  const CDAlgebra& alg = a[0][0].algebra();
  Matrix3 m(3, std::vector<AlgElement>(3, AlgElement(alg)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}

// Sign attached to <x_nu, y_nu> in the trace form.
int slot_sign(const Gamma& g, std::size_t nu) { return g[kRow[nu]] * g[kCol[nu]]; }

}  // namespace

Gamma parse_gamma(const std::string& s) {
  if (s.size() != 3) throw std::invalid_argument("gamma must be three signs, e.g. \"++-\"");
  Gamma g{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (s[i] == '+')
      g[i] = 1;
    else if (s[i] == '-')
      g[i] = -1;
    else
      throw std::invalid_argument("gamma must be three signs, e.g. \"++-\"");
  }
  return g;
}

std::string to_string(const Gamma& g) {
  std::string s;
  for (int x : g) s += x > 0 ? '+' : '-';
  return s;
}

JordanElement::JordanElement(const CDAlgebra& alg, Gamma gamma)
    : x_{AlgElement(alg), AlgElement(alg), AlgElement(alg)}, gamma_(gamma) {
  for (int s : gamma_)
    if (s != 1 && s != -1) throw std::invalid_argument("JordanElement: gamma entries must be +1 or -1");
}

JordanElement::JordanElement(std::array<Rational, 3> lambda, std::array<AlgElement, 3> x, Gamma gamma)
    : lambda_(std::move(lambda)), x_(std::move(x)), gamma_(gamma) {
  require_same_algebra(x_[0], x_[1]);
  require_same_algebra(x_[0], x_[2]);
  for (int s : gamma_)
    if (s != 1 && s != -1) throw std::invalid_argument("JordanElement: gamma entries must be +1 or -1");
}

JordanElement JordanElement::identity(const CDAlgebra& alg, Gamma gamma) {
  JordanElement e(alg, gamma);
  for (auto& l : e.lambda_) l = 1;
  return e;
}

JordanElement JordanElement::diagonal_idempotent(const CDAlgebra& alg, std::size_t i, Gamma gamma) {
  JordanElement e(alg, gamma);
  e.lambda_.at(i) = 1;
  return e;
}

JordanElement JordanElement::from_coords(const CDAlgebra& alg, const RatVector& c, Gamma gamma) {
  if (c.size() != kVDim) throw std::invalid_argument("JordanElement::from_coords: expected 27 coordinates");
  JordanElement e(alg, gamma);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    e.lambda_[nu] = c[lambda_index(nu)];
    for (std::size_t k = 0; k < 8; ++k) e.x_[nu][k] = c[x_index(nu, k)];
  }
  return e;
}

RatVector JordanElement::coords() const {
  RatVector c(kVDim);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    c[lambda_index(nu)] = lambda_[nu];
    for (std::size_t k = 0; k < 8; ++k) c[x_index(nu, k)] = x_[nu][k];
  }
  return c;
}

bool JordanElement::is_zero() const {
  for (std::size_t i = 0; i < 3; ++i)
    if (sgn(lambda_[i]) != 0 || !x_[i].is_zero()) return false;
  return true;
}

void require_compatible(const JordanElement& a, const JordanElement& b) {
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("Jordan elements over different algebras");
  if (a.gamma() != b.gamma()) throw std::invalid_argument("Jordan elements with different gamma twists");
}

JordanElement JordanElement::operator+(const JordanElement& o) const {
  require_compatible(*this, o);
  JordanElement r = *this;
  for (std::size_t i = 0; i < 3; ++i) {
    r.lambda_[i] += o.lambda_[i];
    r.x_[i] += o.x_[i];
  }
  return r;
}

JordanElement JordanElement::operator-(const JordanElement& o) const {
  require_compatible(*this, o);
  JordanElement r = *this;
  for (std::size_t i = 0; i < 3; ++i) {
    r.lambda_[i] -= o.lambda_[i];
    r.x_[i] -= o.x_[i];
  }
  return r;
}

JordanElement JordanElement::operator*(const Rational& s) const {
  JordanElement r = *this;
  for (std::size_t i = 0; i < 3; ++i) {
    r.lambda_[i] *= s;
    r.x_[i] = r.x_[i] * s;
  }
  return r;
}

bool JordanElement::operator==(const JordanElement& o) const {
  return &algebra() == &o.algebra() && gamma_ == o.gamma_ && lambda_ == o.lambda_ && x_ == o.x_;
}

JordanElement jordan_mul(const JordanElement& a, const JordanElement& b) {
  require_compatible(a, b);
  const auto ma = expand(a), mb = expand(b);
  const auto p = product(ma, mb), q = product(mb, ma);
  const Rational half(1, 2);
  std::array<Rational, 3> lambda;
  std::array<AlgElement, 3> x{AlgElement(a.algebra()), AlgElement(a.algebra()), AlgElement(a.algebra())};
  for (std::size_t i = 0; i < 3; ++i) lambda[i] = (p[i][i][0] + q[i][i][0]) * half;
  for (std::size_t nu = 0; nu < 3; ++nu) x[nu] = (p[kRow[nu]][kCol[nu]] + q[kRow[nu]][kCol[nu]]) * half;
  return JordanElement(lambda, x, a.gamma());
}

JordanElement jordan_square(const JordanElement& a) { return jordan_mul(a, a); }

Rational trace(const JordanElement& a) { return a.lambda(0) + a.lambda(1) + a.lambda(2); }

Rational trace_form(const JordanElement& a, const JordanElement& b) {
  require_compatible(a, b);
  Rational t = 0;
  for (std::size_t nu = 0; nu < 3; ++nu) {
    t += a.lambda(nu) * b.lambda(nu);
    t += slot_sign(a.gamma(), nu) * inner(a.x(nu), b.x(nu));
  }
  return t;
}

Rational bilinear_form(const JordanElement& a, const JordanElement& b) { return trace_form(a, b) / 2; }

Rational quadratic_form(const JordanElement& a) { return trace_form(a, a) / 2; }

JordanElement freudenthal(const JordanElement& a, const JordanElement& b) {
  require_compatible(a, b);
  const Rational ta = trace(a), tb = trace(b);
  const Rational half(1, 2);
  const Rational scalar = (ta * tb - trace_form(a, b)) * half;
  return jordan_mul(a, b) - (a * tb + b * ta) * half + JordanElement::identity(a.algebra(), a.gamma()) * scalar;
}

Rational trilinear(const JordanElement& a, const JordanElement& b, const JordanElement& c) {
  return trace_form(a, freudenthal(b, c));
}

Rational det(const JordanElement& a) { return trilinear(a, a, a) / 3; }

Rational det_expanded(const JordanElement& a) {
  if (a.gamma() != kGammaEuclidean) throw std::invalid_argument("det_expanded: only defined for gamma = (+,+,+)");
  const auto& l = a;
  return l.lambda(0) * l.lambda(1) * l.lambda(2) - l.lambda(0) * norm(a.x(0)) - l.lambda(1) * norm(a.x(1)) -
         l.lambda(2) * norm(a.x(2)) + 2 * ((a.x(0) * a.x(1)) * a.x(2)).real();
}

JordanElement sharp(const JordanElement& a) {
  if (a.gamma() != kGammaEuclidean) return freudenthal(a, a);
  const auto& x1 = a.x(0);
  const auto& x2 = a.x(1);
  const auto& x3 = a.x(2);
  const auto& l = a;
  std::array<Rational, 3> lambda{l.lambda(1) * l.lambda(2) - norm(x1), l.lambda(0) * l.lambda(2) - norm(x2),
                                 l.lambda(0) * l.lambda(1) - norm(x3)};
  std::array<AlgElement, 3> x{conj(x2 * x3) - x1 * l.lambda(0), conj(x3 * x1) - x2 * l.lambda(1),
                              conj(x1 * x2) - x3 * l.lambda(2)};
  return JordanElement(lambda, x, a.gamma());
}

RankClass rank_of(const JordanElement& a) {
  if (a.is_zero()) return RankClass::rank0;
  if (sharp(a).is_zero()) return RankClass::rank1;
  if (sgn(det(a)) == 0) return RankClass::rank2;
  return RankClass::rank3;
}

bool is_idempotent(const JordanElement& a) { return jordan_square(a) == a; }

JordanElement veronese_to_jordan(const VElement& w) {
  return JordanElement({w.lambda(0), w.lambda(1), w.lambda(2)}, {w.x(0), w.x(1), w.x(2)}, kGammaEuclidean);
}

VElement jordan_to_veronese(const JordanElement& a) {
  return VElement({a.x(0), a.x(1), a.x(2)}, {a.lambda(0), a.lambda(1), a.lambda(2)});
}

}  // namespace octoplane
