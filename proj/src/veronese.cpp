#include "octoplane/veronese.hpp"

#include <stdexcept>

namespace octoplane {

VElement::VElement(std::array<AlgElement, 3> x, std::array<Rational, 3> lambda)
    : x_(std::move(x)), lambda_(std::move(lambda)), alg_(&x_[0].algebra()) {
  require_same_algebra(x_[0], x_[1]);
  require_same_algebra(x_[0], x_[2]);
}

VElement VElement::from_coords(const CDAlgebra& alg, const RatVector& c) {
  if (c.size() != kVDim) throw std::invalid_argument("VElement::from_coords: expected 27 coordinates");
  VElement w(alg);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    w.lambda_[nu] = c[lambda_index(nu)];
    for (std::size_t k = 0; k < 8; ++k) w.x_[nu][k] = c[x_index(nu, k)];
  }
  return w;
}

RatVector VElement::coords() const {
  RatVector c(kVDim);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    c[lambda_index(nu)] = lambda_[nu];
    for (std::size_t k = 0; k < 8; ++k) c[x_index(nu, k)] = x_[nu][k];
  }
  return c;
}

bool VElement::is_zero() const {
  for (std::size_t nu = 0; nu < 3; ++nu)
    if (sgn(lambda_[nu]) != 0 || !x_[nu].is_zero()) return false;
  return true;
}

VElement VElement::operator+(const VElement& o) const {
  if (alg_ != o.alg_) throw std::invalid_argument("VElement: different algebras");
  VElement r = *this;
  for (std::size_t nu = 0; nu < 3; ++nu) {
    r.x_[nu] += o.x_[nu];
    r.lambda_[nu] += o.lambda_[nu];
  }
  return r;
}

VElement VElement::operator-(const VElement& o) const {
  if (alg_ != o.alg_) throw std::invalid_argument("VElement: different algebras");
  VElement r = *this;
  for (std::size_t nu = 0; nu < 3; ++nu) {
    r.x_[nu] -= o.x_[nu];
    r.lambda_[nu] -= o.lambda_[nu];
  }
  return r;
}

VElement VElement::operator*(const Rational& s) const {
  VElement r = *this;
  for (std::size_t nu = 0; nu < 3; ++nu) {
    r.x_[nu] = r.x_[nu] * s;
    r.lambda_[nu] *= s;
  }
  return r;
}

bool VElement::operator==(const VElement& o) const {
  return alg_ == o.alg_ && x_ == o.x_ && lambda_ == o.lambda_;
}

bool is_veronese(const AlgElement& x1, const AlgElement& x2, const AlgElement& x3, const Rational& l1,
                 const Rational& l2, const Rational& l3) {
  require_same_algebra(x1, x2);
  require_same_algebra(x1, x3);
  return conj(x1) * l1 == x2 * x3 && conj(x2) * l2 == x3 * x1 && conj(x3) * l3 == x1 * x2 &&
         norm(x1) == l2 * l3 && norm(x2) == l3 * l1 && norm(x3) == l1 * l2;
}

bool is_veronese(const VElement& w) {
  return is_veronese(w.x(0), w.x(1), w.x(2), w.lambda(0), w.lambda(1), w.lambda(2));
}

VeroneseVector::VeroneseVector(VElement w) : w_(std::move(w)) {
  if (!is_veronese(w_)) throw NotVeronese("vector does not satisfy the Veronese conditions");
}

Rational beta(const VElement& a, const VElement& b) {
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("beta: different algebras");
  Rational s = 0;
  for (std::size_t nu = 0; nu < 3; ++nu) s += inner(a.x(nu), b.x(nu)) + a.lambda(nu) * b.lambda(nu);
  return s;
}

VElement hyperbolic_twist(const VElement& w) {
  VElement r = w;
  r.x(0) = -w.x(0);
  r.x(1) = -w.x(1);
  return r;
}

Rational beta_minus(const VElement& a, const VElement& b) { return beta(a, hyperbolic_twist(b)); }

Rational beta_flip_slot3(const VElement& a, const VElement& b) {
  return beta(a, b) - 2 * (inner(a.x(2), b.x(2)) + a.lambda(2) * b.lambda(2));
}

std::string to_string(Polarity p) { return p == Polarity::elliptic ? "elliptic" : "hyperbolic"; }

Polarity parse_polarity(const std::string& s) {
  if (s == "elliptic") return Polarity::elliptic;
  if (s == "hyperbolic") return Polarity::hyperbolic;
  throw std::invalid_argument("unknown polarity '" + s + "' (expected elliptic or hyperbolic)");
}

Rational form(Polarity kind, const VElement& a, const VElement& b) {
  return kind == Polarity::elliptic ? beta(a, b) : beta_minus(a, b);
}

namespace {

VElement canonical(const VElement& w) {
  const Rational t = w.lambda_sum();
  if (sgn(t) != 0) return w * (1 / t);
  for (std::size_t nu = 0; nu < 3; ++nu)
    if (sgn(w.lambda(nu)) != 0) return w * (1 / w.lambda(nu));
  const RatVector c = w.coords();
  for (const auto& v : c)
    if (sgn(v) != 0) return w * (1 / v);
  throw NotVeronese("zero vector does not represent a point");
}

}  // namespace

ProjPoint::ProjPoint(const VElement& w) : rep_(w.algebra()) {
  if (w.is_zero()) throw NotVeronese("zero vector does not represent a point");
  if (!is_veronese(w)) throw NotVeronese("vector does not satisfy the Veronese conditions");
  rep_ = canonical(w);
}

VElement normalize_trace_one(const VElement& w) {
  const Rational t = w.lambda_sum();
  if (sgn(t) == 0) throw TraceZero("cannot normalize to trace 1: l1 + l2 + l3 = 0");
  return w * (1 / t);
}

ProjPoint embed_point(const AffineChartPoint& chart, const CDAlgebra& alg) {
  VElement w(alg);
  if (const auto* f = std::get_if<Finite>(&chart)) {
    require_same_algebra(f->x, f->y);
    if (&f->x.algebra() != &alg) throw std::invalid_argument("embed_point: chart coordinates over another algebra");
    w = VElement({f->x, conj(f->y), f->y * conj(f->x)}, {norm(f->y), norm(f->x), Rational(1)});
  } else if (const auto* s = std::get_if<Slope>(&chart)) {
    if (&s->s.algebra() != &alg) throw std::invalid_argument("embed_point: chart coordinates over another algebra");
    w = VElement({AlgElement(alg), AlgElement(alg), s->s}, {norm(s->s), Rational(1), Rational(0)});
  } else {
    w.lambda(0) = 1;
  }
  if (!is_veronese(w)) throw DegenerateChart("chart image fails the Veronese conditions");
  return ProjPoint(w);
}

ProjLine embed_line(const AffineChartLine& chart, const CDAlgebra& alg) {
  VElement w(alg);
  if (const auto* st = std::get_if<SlopeIntercept>(&chart)) {
    require_same_algebra(st->s, st->t);
    if (&st->s.algebra() != &alg) throw std::invalid_argument("embed_line: chart coordinates over another algebra");
    w = VElement({conj(st->s) * st->t, -conj(st->t), -st->s}, {Rational(1), norm(st->s), norm(st->t)});
  } else if (const auto* v = std::get_if<Vertical>(&chart)) {
    if (&v->c.algebra() != &alg) throw std::invalid_argument("embed_line: chart coordinates over another algebra");
    w = VElement({-v->c, AlgElement(alg), AlgElement(alg)}, {Rational(0), Rational(1), norm(v->c)});
  } else {
    w.lambda(2) = 1;
  }
  if (!is_veronese(w)) throw DegenerateChart("line chart pole fails the Veronese conditions");
  return ProjLine{ProjPoint(w), Polarity::elliptic};
}

AffineChartPoint chart_of(const ProjPoint& p) {
  const VElement& w = p.representative();
  const CDAlgebra& alg = p.algebra();
  AffineChartPoint c = Infinity{};
  if (sgn(w.lambda(2)) != 0) {
    const Rational inv = 1 / w.lambda(2);
    c = Finite{w.x(0) * inv, conj(w.x(1)) * inv};
  } else if (sgn(w.lambda(1)) != 0) {
    c = Slope{w.x(2) * (1 / w.lambda(1))};
  } else if (sgn(w.lambda(0)) == 0) {
    throw DegenerateChart("point lies outside all affine charts");
  }
  if (!(embed_point(c, alg) == p)) throw DegenerateChart("point lies outside all affine charts");
  return c;
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return sgn(form(l.kind, p.representative(), l.pole.representative())) == 0;
}

ProjLine polarity(const ProjPoint& p, Polarity kind) { return ProjLine{p, kind}; }

ProjPoint polarity_inverse(const ProjLine& l) { return l.pole; }

VElement triality(const VElement& w) {
  return VElement({w.x(1), w.x(2), w.x(0)}, {w.lambda(1), w.lambda(2), w.lambda(0)});
}

VeroneseVector triality(const VeroneseVector& w) { return VeroneseVector(triality(w.value())); }

VElement translate(const AlgElement& a, const AlgElement& b, const VElement& w) {
  require_same_algebra(a, b);
  if (&a.algebra() != &w.algebra()) throw std::invalid_argument("translate: different algebras");
  const Rational& l3 = w.lambda(2);
  const AlgElement x1b = conj(w.x(0)), x2b = conj(w.x(1)), ab = conj(a);
  VElement r = w;
  r.x(0) = w.x(0) + a * l3;
  r.x(1) = w.x(1) + conj(b) * l3;
  r.x(2) = w.x(2) + b * x1b + x2b * ab + (b * ab) * l3;
  r.lambda(0) = w.lambda(0) + inner(x2b, b) + l3 * norm(b);
  r.lambda(1) = w.lambda(1) + inner(w.x(0), a) + l3 * norm(a);
  return r;
}

VeroneseVector translate(const AlgElement& a, const AlgElement& b, const VeroneseVector& w) {
  return VeroneseVector(translate(a, b, w.value()));
}

VElement translate_as_printed(const AlgElement& a, const AlgElement& b, const VElement& w) {
  require_same_algebra(a, b);
  if (&a.algebra() != &w.algebra()) throw std::invalid_argument("translate: different algebras");
  const Rational& l3 = w.lambda(2);
  const AlgElement x1b = conj(w.x(0)), x2b = conj(w.x(1)), ab = conj(a);
  VElement r = w;
  r.x(0) = w.x(0) + a * l3;
  r.x(1) = w.x(1) + conj(b) * l3;
  r.x(2) = w.x(2) + b * x1b + x2b * ab + (b * ab) * l3;
  r.lambda(0) = w.lambda(0) + inner(x2b, a) + l3 * norm(b);
  r.lambda(1) = w.lambda(1) + inner(x1b, a) + l3 * norm(a);
  return r;
}

namespace {

VElement cross(const VElement& a, const VElement& b) {
  return jordan_to_veronese(freudenthal(veronese_to_jordan(a), veronese_to_jordan(b)));
}

// Vector w with line = {z : beta(z, w) = 0}.
VElement elliptic_pole(const ProjLine& l) {
  return l.kind == Polarity::elliptic ? l.pole.representative() : hyperbolic_twist(l.pole.representative());
}

}  // namespace

ProjLine join(const ProjPoint& p, const ProjPoint& q, Polarity kind) {
  if (&p.algebra() != &q.algebra()) throw std::invalid_argument("join: points over different algebras");
  if (p == q) throw std::invalid_argument("join: points must be distinct");
  VElement c = cross(p.representative(), q.representative());
  if (c.is_zero()) throw DegeneratePair("join: Freudenthal cross of the two points vanishes");
  if (kind == Polarity::hyperbolic) c = hyperbolic_twist(c);
  return ProjLine{ProjPoint(c), kind};
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (&l.pole.algebra() != &m.pole.algebra()) throw std::invalid_argument("meet: lines over different algebras");
  const VElement a = elliptic_pole(l), b = elliptic_pole(m);
  if (ProjPoint(a) == ProjPoint(b)) throw std::invalid_argument("meet: lines must be distinct");
  const VElement c = cross(a, b);
  if (c.is_zero()) throw DegeneratePair("meet: Freudenthal cross of the two poles vanishes");
  return ProjPoint(c);
}

}  // namespace octoplane
