#include "octoplane/random.hpp"

namespace octoplane {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::rational(long bound) {
  Rational r(integer(-bound, bound), integer(1, 3));
  r.canonicalize();
  return r;
}

Rational Sampler::nonzero_rational(long bound) {
  for (;;) {
    Rational r = rational(bound);
    if (sgn(r) != 0) return r;
  }
}

AlgElement Sampler::alg_element(const CDAlgebra& alg, long bound) {
  AlgElement a(alg);
  for (std::size_t k = 0; k < 8; ++k) a[k] = integer(-bound, bound);
  return a;
}

VElement Sampler::v_element(const CDAlgebra& alg, long bound) {
  VElement w(alg);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    w.x(nu) = alg_element(alg, bound);
    w.lambda(nu) = integer(-bound, bound);
  }
  return w;
}

JordanElement Sampler::jordan_element(const CDAlgebra& alg, Gamma gamma, long bound) {
  return JordanElement({Rational(integer(-bound, bound)), Rational(integer(-bound, bound)),
                        Rational(integer(-bound, bound))},
                       {alg_element(alg, bound), alg_element(alg, bound), alg_element(alg, bound)}, gamma);
}

VElement Sampler::veronese_vector(const CDAlgebra& alg, long bound) {
  const long kind = integer(0, 19);
  AffineChartPoint c = Infinity{};
  if (kind < 17)
    c = Finite{alg_element(alg, bound), alg_element(alg, bound)};
  else if (kind < 19)
    c = Slope{alg_element(alg, bound)};
  return embed_point(c, alg).representative() * nonzero_rational(bound + 1);
}

ProjPoint Sampler::point(const CDAlgebra& alg, long bound) { return ProjPoint(veronese_vector(alg, bound)); }

AffineChartLine Sampler::chart_line(const CDAlgebra& alg, long bound) {
  const long kind = integer(0, 19);
  if (kind < 17) return SlopeIntercept{alg_element(alg, bound), alg_element(alg, bound)};
  if (kind < 19) return Vertical{alg_element(alg, bound)};
  return LineAtInfinity{};
}

}  // namespace octoplane
