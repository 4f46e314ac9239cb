#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include "octoplane/jordan.hpp"
#include "octoplane/random.hpp"
#include "octoplane/serialize.hpp"
#include "octoplane/veronese.hpp"

using namespace octoplane;

namespace {

const CDAlgebra& O = CDAlgebra::octonions();
const CDAlgebra* const kBoth[] = {&CDAlgebra::octonions(), &CDAlgebra::split_octonions()};
const Gamma kTwisted{1, 1, -1};

JordanElement E(std::size_t i, const CDAlgebra& alg = O) { return JordanElement::diagonal_idempotent(alg, i); }

}  // namespace

TEST_CASE("gamma parsing") {
  CHECK(parse_gamma("++-") == kTwisted);
  CHECK(to_string(kTwisted) == "++-");
  CHECK_THROWS_AS(parse_gamma("++"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gamma("+x-"), std::invalid_argument);
  CHECK_THROWS_AS(JordanElement(O, Gamma{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("Jordan product against the test-side matrix product") {
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(1);
    for (int t = 0; t < 30; ++t) {
      const auto x = rng.jordan_element(*alg), y = rng.jordan_element(*alg);
      CHECK(jordan_mul(x, y).coords() == oracle::jordan_product(x.coords(), y.coords(), alg->mu()));
    }
  }
}

TEST_CASE("unit, orthogonal idempotents and the Jordan identity") {
  const auto I = JordanElement::identity(O);
  Sampler rng(2);
  const auto x = rng.jordan_element(O);
  CHECK(jordan_mul(I, x) == x);
  CHECK(jordan_mul(E(0), E(1)).is_zero());
  for (const CDAlgebra* alg : kBoth)
    for (Gamma g : {kGammaEuclidean, kTwisted})
      for (int t = 0; t < 200; ++t) {
        const auto a = rng.jordan_element(*alg, g), b = rng.jordan_element(*alg, g);
        const auto a2 = jordan_square(a);
        CHECK(jordan_mul(jordan_mul(a, b), a2) == jordan_mul(a, jordan_mul(b, a2)));
      }
}

TEST_CASE("mixing algebras or twists is rejected") {
  const auto a = JordanElement::identity(O);
  CHECK_THROWS_AS(jordan_mul(a, JordanElement::identity(CDAlgebra::split_octonions())), std::invalid_argument);
  CHECK_THROWS_AS(jordan_mul(a, JordanElement::identity(O, kTwisted)), std::invalid_argument);
}

TEST_CASE("trace and bilinear forms") {
  CHECK(trace(JordanElement::identity(O)) == 3);
  CHECK(quadratic_form(E(0)) == make_rational(1, 2));
  Sampler rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto x = rng.jordan_element(O, kTwisted), y = rng.jordan_element(O, kTwisted);
    CHECK(bilinear_form(x, y) == bilinear_form(y, x));
    CHECK(trace_form(x, y) == trace(jordan_mul(x, y)));
  }
}

TEST_CASE("Freudenthal product") {
  const auto I = JordanElement::identity(O);
  // With the coefficients that make X*X the adjoint, the unit is its own square.
  CHECK(freudenthal(I, I) == I);
  CHECK(freudenthal(E(0), E(0)).is_zero());
  CHECK(freudenthal(E(0), E(1)) == E(2) * make_rational(1, 2));
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(4);
    for (int t = 0; t < 200; ++t) {
      const auto x = rng.jordan_element(*alg);
      CHECK(freudenthal(x, x) == sharp(x));
    }
  }
}

TEST_CASE("determinant") {
  CHECK(det(JordanElement::identity(O)) == 1);
  const JordanElement d({Rational(2), Rational(-3), make_rational(5, 7)}, {AlgElement(O), AlgElement(O), AlgElement(O)});
  CHECK(det(d) == make_rational(-30, 7));
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(5);
    for (int t = 0; t < 100; ++t) {
      const auto x = rng.jordan_element(*alg);
      CHECK(det(x) == det_expanded(x));
      CHECK(det(x) == oracle::det3({x.coords(), alg->mu()}));
      const auto y = rng.jordan_element(*alg), z = rng.jordan_element(*alg);
      CHECK(trilinear(x, y, z) == trilinear(z, x, y));
      CHECK(trilinear(x, y, z) == trilinear(y, x, z));
    }
  }
  CHECK_THROWS_AS(det_expanded(JordanElement::identity(O, kTwisted)), std::invalid_argument);
}

TEST_CASE("sharp map") {
  CHECK(sharp(JordanElement::identity(O)) == JordanElement::identity(O));
  CHECK(sharp(E(0)).is_zero());
  for (const CDAlgebra* alg : kBoth)
    for (Gamma g : {kGammaEuclidean, kTwisted}) {
      Sampler rng(6);
      for (int t = 0; t < 200; ++t) {
        const auto x = rng.jordan_element(*alg, g);
        CHECK(sharp(sharp(x)) == x * det(x));
      }
    }
}

TEST_CASE("rank stratification") {
  CHECK(rank_of(JordanElement(O)) == RankClass::rank0);
  CHECK(rank_of(JordanElement::identity(O)) == RankClass::rank3);
  CHECK(rank_of(E(0) + E(1)) == RankClass::rank2);
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(7);
    for (int t = 0; t < 300; ++t) {
      const auto w = rng.veronese_vector(*alg);
      const auto x = veronese_to_jordan(w);
      CHECK(rank_of(x) == RankClass::rank1);
      CHECK(det(x) == 0);
    }
  }
}

TEST_CASE("idempotents of rank one have trace one") {
  CHECK(is_idempotent(E(0)));
  CHECK_FALSE(is_idempotent(E(0) * 2));
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(8);
    int tested = 0;
    while (tested < 100) {
      const auto w = rng.veronese_vector(*alg);
      if (sgn(w.lambda_sum()) == 0) continue;
      const auto x = veronese_to_jordan(normalize_trace_one(w));
      CHECK(is_idempotent(x));
      CHECK_FALSE(is_idempotent(x * 2));
      ++tested;
    }
  }
}

TEST_CASE("V and J3 correspond coordinatewise") {
  const VElement inf({AlgElement(O), AlgElement(O), AlgElement(O)}, {Rational(1), Rational(0), Rational(0)});
  CHECK(veronese_to_jordan(inf) == E(0));
  CHECK(veronese_to_jordan(VElement(O)).is_zero());
  Sampler rng(9);
  const auto w = rng.v_element(O);
  CHECK(jordan_to_veronese(veronese_to_jordan(w)) == w);
}

TEST_CASE("JSON round trip") {
  Sampler rng(10);
  for (Gamma g : {kGammaEuclidean, kTwisted}) {
    const auto x = rng.jordan_element(CDAlgebra::split_octonions(), g, 3) * make_rational(2, 3);
    CHECK(jordan_from_json(to_json(x)) == x);
  }
  CHECK_THROWS_AS(jordan_from_json(Json{{"lambda", {1, 2}}}), std::invalid_argument);
}
