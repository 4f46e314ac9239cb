#pragma once

// Test-only reference implementations. They share no code with the library
// beyond the Rational type.

#include "octoplane/rational.hpp"

#include <cstdint>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using octoplane::Rational;
using Vec = std::vector<Rational>;

inline constexpr std::int64_t kPrimeA = 1000003;
inline constexpr std::int64_t kPrimeB = 998244353;

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
    b = static_cast<std::int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

inline std::int64_t reduce(const Rational& q, std::int64_t p) {
  const octoplane::Integer pm(static_cast<long>(p));
  octoplane::Integer n = q.get_num() % pm, d = q.get_den() % pm;
  if (n < 0) n += pm;
  const std::int64_t ni = n.get_si(), di = d.get_si();
  return static_cast<std::int64_t>((__int128)ni * pow_mod(di, p - 2, p) % p);
}

/// Dense Gaussian elimination mod p.
inline std::size_t rank_mod(const std::vector<Vec>& rows, std::int64_t p = kPrimeA) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::int64_t> v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = reduce(r[c], p);
    m.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t inv = pow_mod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)m[r][c] * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        if (m[rank][k] == 0) continue;
        m[r][k] = (m[r][k] - static_cast<std::int64_t>((__int128)f * m[rank][k] % p) + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

/// True iff every row annihilates every vector, checked modulo p.
inline bool annihilates_mod(const std::vector<Vec>& rows, const std::vector<Vec>& vectors, std::int64_t p = kPrimeB) {
  auto reduce_all = [p](const std::vector<Vec>& vs) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& v : vs) {
      std::vector<std::int64_t> r(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) r[i] = sgn(v[i]) == 0 ? 0 : reduce(v[i], p);
      out.push_back(std::move(r));
    }
    return out;
  };
  const auto rs = reduce_all(rows), vs = reduce_all(vectors);
  for (const auto& v : vs)
    for (const auto& r : rs) {
      __int128 s = 0;
      for (std::size_t i = 0; i < r.size(); ++i) s += (__int128)r[i] * v[i];
      if (s % p != 0) return false;
    }
  return true;
}

inline bool same_span_mod(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank_mod(a), rb = rank_mod(b);
  return ra == rb && rank_mod(both) == ra;
}

/// Cayley-Dickson product on 2^k coordinates, with (a,b)(c,d) = (ac + mu ~d b, d a + b ~c).
/// The top level uses top_mu; lower levels use -1 (C, H).
inline Vec cd_conj(const Vec& a) {
  Vec r(a.size());
  r[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vec cd_mul(const Vec& a, const Vec& b, int mu) {
  const std::size_t n = a.size();
  if (n == 1) return {a[0] * b[0]};
  const std::size_t h = n / 2;
  const Vec a0(a.begin(), a.begin() + h), a1(a.begin() + h, a.end());
  const Vec b0(b.begin(), b.begin() + h), b1(b.begin() + h, b.end());
  const Vec p = cd_mul(a0, b0, -1), q = cd_mul(cd_conj(b1), a1, -1);
  const Vec r = cd_mul(b1, a0, -1), s = cd_mul(a1, cd_conj(b0), -1);
  Vec out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = p[i] + mu * q[i];
    out[h + i] = r[i] + s[i];
  }
  return out;
}

inline Rational cd_norm(const Vec& a, int mu) { return cd_mul(cd_conj(a), a, mu)[0]; }

/// Exact inertia (p, n, z) by symmetric congruence with diagonal pivoting.
inline std::tuple<std::size_t, std::size_t, std::size_t> inertia(std::vector<Vec> a) {
  const std::size_t n = a.size();
  std::size_t pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && sgn(a[i][i]) != 0) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && sgn(a[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      // e_i -> e_i + e_j makes the diagonal entry 2 a_ij.
      for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
      for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
      piv = pi;
    }
    const Rational d = a[piv][piv];
    (sgn(d) > 0 ? pos : neg)++;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || sgn(a[i][piv]) == 0) continue;
      const Rational f = a[i][piv] / d;
      for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[piv][k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      a[i][piv] = 0;
    }
    for (std::size_t k = 0; k < n; ++k)
      if (k != piv) a[piv][k] = a[k][piv] = 0;
  }
  return {pos, neg, n - pos - neg};
}

/// Square matrix as a flat row-major vector.
inline Vec mat_mul(const Vec& a, const Vec& b, std::size_t n) {
  Vec c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i * n + k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return c;
}

inline Rational mat_trace(const Vec& a, std::size_t n) {
  Rational t = 0;
  for (std::size_t i = 0; i < n; ++i) t += a[i * n + i];
  return t;
}

/// Gram matrix tr(L_i L_j) of a matrix Lie algebra in its defining
/// representation. For a simple algebra this is a positive multiple of the
/// Killing form, so it has the same inertia.
inline std::vector<Vec> trace_gram(const std::vector<Vec>& basis, std::size_t n) {
  const std::size_t d = basis.size();
  std::vector<Vec> g(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) g[i][j] = g[j][i] = mat_trace(mat_mul(basis[i], basis[j], n), n);
  return g;
}

/// Elements of J3 over an 8-dim composition algebra as 27 coordinates
/// (l1, l2, l3, x1, x2, x3), Euclidean involution.
struct Herm {
  Vec c;
  int mu;
  Vec x(std::size_t nu) const { return Vec(c.begin() + 3 + 8 * nu, c.begin() + 11 + 8 * nu); }
};

inline Rational det3(const Herm& h) {
  const Vec x1 = h.x(0), x2 = h.x(1), x3 = h.x(2);
  const Rational &l1 = h.c[0], &l2 = h.c[1], &l3 = h.c[2];
  return l1 * l2 * l3 - l1 * cd_norm(x1, h.mu) - l2 * cd_norm(x2, h.mu) - l3 * cd_norm(x3, h.mu) +
         2 * cd_mul(cd_mul(x1, x2, h.mu), x3, h.mu)[0];
}

/// Derivative of det at X in direction V, exact for the cubic polynomial
/// t -> det(X + tV) via a five-point stencil.
inline Rational det_derivative(const Vec& x, const Vec& v, int mu) {
  auto at = [&](int t) {
    Vec c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = x[i] + t * v[i];
    return det3({c, mu});
  };
  return (8 * (at(1) - at(-1)) - (at(2) - at(-2))) / 12;
}

/// Gradient of det at X: d det(X; V) = sum_i grad_i V_i. Uses Re((ab)c) = Re(a(bc)).
inline Vec det_gradient(const Vec& c, int mu) {
  const Herm h{c, mu};
  const Vec x1 = h.x(0), x2 = h.x(1), x3 = h.x(2);
  Vec g(27);
  g[0] = c[1] * c[2] - cd_norm(x1, mu);
  g[1] = c[0] * c[2] - cd_norm(x2, mu);
  g[2] = c[0] * c[1] - cd_norm(x3, mu);
  // Re((x1 x2) x3) is cyclic, so each slot pairs with the product of the other two.
  const Vec p23 = cd_mul(x2, x3, mu), p31 = cd_mul(x3, x1, mu), p12 = cd_mul(x1, x2, mu);
  const Vec* others[3] = {&p23, &p31, &p12};
  const Vec* own[3] = {&x1, &x2, &x3};
  for (std::size_t nu = 0; nu < 3; ++nu)
    for (std::size_t k = 0; k < 8; ++k) {
      Vec e(8);
      e[k] = 1;
      const Rational n_ek = cd_norm(e, mu);
      // d|x|^2 along e_k is 2 n(e_k) x_k.
      g[3 + 8 * nu + k] = -c[nu] * 2 * n_ek * (*own[nu])[k] + 2 * cd_mul(e, *others[nu], mu)[0];
    }
  return g;
}

/// Jordan product (XY + YX)/2 on the expanded matrix
///   ( l1   x3   ~x2 )
///   ( ~x3  l2   x1  )
///   ( x2   ~x1  l3  )
inline Vec jordan_product(const Vec& a, const Vec& b, int mu) {
  using M = std::vector<std::vector<Vec>>;
  auto expand = [](const Vec& c) {
    M m(3, std::vector<Vec>(3, Vec(8)));
    for (int i = 0; i < 3; ++i) m[i][i][0] = c[i];
    const Vec x1(c.begin() + 3, c.begin() + 11), x2(c.begin() + 11, c.begin() + 19), x3(c.begin() + 19, c.end());
    m[0][1] = x3;
    m[1][0] = cd_conj(x3);
    m[1][2] = x1;
    m[2][1] = cd_conj(x1);
    m[2][0] = x2;
    m[0][2] = cd_conj(x2);
    return m;
  };
  const M ma = expand(a), mb = expand(b);
  auto entry = [&](int i, int j) {
    Vec s(8);
    for (int k = 0; k < 3; ++k) {
      const Vec p = cd_mul(ma[i][k], mb[k][j], mu), q = cd_mul(mb[i][k], ma[k][j], mu);
      for (int t = 0; t < 8; ++t) s[t] += (p[t] + q[t]) / 2;
    }
    return s;
  };
  Vec out(27);
  for (int i = 0; i < 3; ++i) out[i] = entry(i, i)[0];
  const Vec x1 = entry(1, 2), x2 = entry(2, 0), x3 = entry(0, 1);
  for (int t = 0; t < 8; ++t) {
    out[3 + t] = x1[t];
    out[11 + t] = x2[t];
    out[19 + t] = x3[t];
  }
  return out;
}

inline Vec random_int_vec(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace oracle
