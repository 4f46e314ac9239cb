#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include "octoplane/jordan.hpp"
#include "octoplane/linalg.hpp"
#include "octoplane/lie.hpp"
#include "octoplane/random.hpp"

#include <random>

using namespace octoplane;

namespace {

RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  RatMatrix m(r, c);
  std::uniform_int_distribution<int> d(-bound, bound);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

std::vector<RatVector> rows_of(const RatMatrix& m) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

// Product of random low-rank factors, so the rank is known to be at most k.
RatMatrix low_rank(std::mt19937_64& rng, std::size_t r, std::size_t c, std::size_t k) {
  return random_int_matrix(rng, r, k, 4) * random_int_matrix(rng, k, c, 4);
}

void check_kernel(const RatMatrix& m, const std::vector<RatVector>& basis) {
  for (const auto& v : basis) CHECK(is_zero(m * v));
  if (!basis.empty()) CHECK(oracle::rank_mod(basis) == basis.size());
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(common_denominator({make_rational(1, 6), make_rational(3, 4)}) == 12);
}

TEST_CASE("nullspace of tiny matrices") {
  CHECK(nullspace(RatMatrix(1, 1, {Rational(1)})).empty());

  const auto ns = nullspace(RatMatrix(1, 2, {Rational(1), Rational(1)}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RatVector{Rational(-1), Rational(1)});

  const auto full = nullspace(RatMatrix(2, 3));
  CHECK(full.size() == 3);
}

TEST_CASE("rank of identity, zero and random matrices") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix(4, 5)) == 0);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_int_matrix(rng, 10, 10, 9);
    const auto ra = oracle::rank_mod(rows_of(m), oracle::kPrimeA);
    const auto rb = oracle::rank_mod(rows_of(m), oracle::kPrimeB);
    CHECK(ra == rb);
    CHECK(rank(m) == ra);
  }
}

TEST_CASE("both elimination methods return the same canonical kernel") {
  std::mt19937_64 rng(11);
  for (auto [r, c, k] : {std::tuple{12, 20, 5}, std::tuple{40, 30, 17}, std::tuple{90, 80, 61}}) {
    const auto m = low_rank(rng, r, c, k);
    const auto a = nullspace(m, EliminationMethod::bareiss);
    const auto b = nullspace(m, EliminationMethod::multimodular);
    const auto expected_rank = oracle::rank_mod(rows_of(m));
    CHECK(a.size() == static_cast<std::size_t>(c) - expected_rank);
    CHECK(a == b);
    check_kernel(m, a);
    CHECK(rank(m, EliminationMethod::bareiss) + a.size() == static_cast<std::size_t>(c));
  }
}

TEST_CASE("kernel with large rational entries") {
  std::mt19937_64 rng(3);
  RatMatrix m = low_rank(rng, 30, 36, 20);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) *= make_rational(1000003, static_cast<std::int64_t>(i + 1)) * make_rational(1, static_cast<std::int64_t>(j + 2));
  const auto ns = nullspace(m, EliminationMethod::multimodular);
  CHECK(ns.size() == 16);
  check_kernel(m, ns);
  CHECK(ns == nullspace(m, EliminationMethod::bareiss));
}

TEST_CASE("sparse and dense paths agree") {
  std::mt19937_64 rng(5);
  const auto m = low_rank(rng, 25, 30, 9);
  const auto s = SparseRatMatrix::from_dense(m);
  CHECK(s.to_dense() == m);
  CHECK(nullspace(s) == nullspace(m));
  CHECK(rank(s) == 9);
  CHECK(rank_mod_prime(s) == 9);
}

TEST_CASE("sharp-vanishing system at a rank-2 element") {
  // Y -> X*Y for a generic rank-2 X; its kernel is cross-checked mod a 7-digit prime.
  const auto& alg = CDAlgebra::octonions();
  Sampler rng(19);
  const VElement w1 = rng.veronese_vector(alg), w2 = rng.veronese_vector(alg);
  const JordanElement x = veronese_to_jordan(w1) + veronese_to_jordan(w2);
  REQUIRE(rank_of(x) == RankClass::rank2);
  RatMatrix m(kVDim, kVDim);
  for (std::size_t j = 0; j < kVDim; ++j) {
    RatVector e(kVDim);
    e[j] = 1;
    const auto col = freudenthal(x, JordanElement::from_coords(alg, e)).coords();
    for (std::size_t i = 0; i < kVDim; ++i) m(i, j) = col[i];
  }
  const auto ns = nullspace(m);
  CHECK(ns.size() == kVDim - oracle::rank_mod(rows_of(m), oracle::kPrimeA));
  check_kernel(m, ns);
}

TEST_CASE("symmetric signature") {
  CHECK(symmetric_signature(RatMatrix::diagonal({Rational(1), Rational(-1)})) == Signature{1, 1, 0});
  CHECK(symmetric_signature(RatMatrix::diagonal({Rational(2), Rational(3), Rational(0)})) == Signature{2, 0, 1});
  CHECK(symmetric_signature(RatMatrix(2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)})) ==
        Signature{1, 1, 0});
  CHECK_THROWS_AS(symmetric_signature(RatMatrix(2, 2, {Rational(0), Rational(1), Rational(2), Rational(0)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(symmetric_signature(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("signature is invariant under congruence") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    RatMatrix d(7, 7);
    std::uniform_int_distribution<int> sign(-1, 1);
    for (std::size_t i = 0; i < 7; ++i) d(i, i) = sign(rng) * (1 + static_cast<int>(i));
    RatMatrix p = random_int_matrix(rng, 7, 7, 3);
    while (rank(p) < 7) p = random_int_matrix(rng, 7, 7, 3);
    const RatMatrix m = p.transpose() * d * p;
    CHECK(symmetric_signature(m) == symmetric_signature(d));
    std::vector<oracle::Vec> rows;
    for (std::size_t i = 0; i < 7; ++i) rows.push_back(m.row(i));
    const auto [pos, neg, zer] = oracle::inertia(rows);
    CHECK(symmetric_signature(m) == Signature{pos, neg, zer});
  }
}

TEST_CASE("solve_in_span") {
  const RatVector e1{Rational(1), Rational(0)}, e2{Rational(0), Rational(1)};
  CHECK(solve_in_span({e1}, {Rational(3), Rational(0)}) == RatVector{Rational(3)});
  CHECK_THROWS_AS(solve_in_span({e1}, e2), NotInSpan);
  CHECK_THROWS_AS(SpanSolver({e1, e1}), std::invalid_argument);
}

TEST_CASE("brackets of derivations recombine exactly in the derivation basis") {
  const auto der = derivations_of_algebra(CDAlgebra::octonions());
  const auto flat = der.flat_basis();
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> pick(0, der.dim() - 1);
  for (int t = 0; t < 10; ++t) {
    const auto& a = der.basis()[pick(rng)];
    const auto& b = der.basis()[pick(rng)];
    const auto br = bracket(a, b);
    const auto c = solve_in_span(flat, br.entries());
    RatVector sum(br.entries().size());
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c[k] * flat[k][i];
    CHECK(sum == br.entries());
  }
}

TEST_CASE("same_span and span_contains") {
  std::mt19937_64 rng(31);
  const auto m = random_int_matrix(rng, 4, 9, 5);
  auto rows = rows_of(m);
  std::vector<RatVector> mixed;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RatVector v = rows[i];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += 2 * rows[(i + 1) % rows.size()][k];
    mixed.push_back(v);
  }
  CHECK(same_span(rows, mixed) == oracle::same_span_mod(rows, mixed));
  CHECK(span_contains(rows, {rows[0]}));
  CHECK_FALSE(span_contains({rows[0]}, rows));
}
