#include "octoplane/modular.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <stdexcept>

namespace octoplane::modular {
namespace {

bool is_prime32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2u, 3u, 5u, 7u})
    if (n % d == 0) return n == d;
  // Deterministic Miller-Rabin for 32-bit inputs.
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) { return a * b % n; };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (a %= n; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  };
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::pair{nt, t - q * nt};
    std::tie(r, nr) = std::pair{nr, r - q * nr};
  }
  if (r != 1) throw std::logic_error("modular inverse of non-unit");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

}  // namespace

std::uint32_t prime(std::size_t k) {
  static std::vector<std::uint32_t> cache;
  static std::mutex mu;
  static constexpr std::uint32_t kTop = (1u << 28);
  std::lock_guard lock(mu);
  while (cache.size() <= k) {
    std::uint32_t c = cache.empty() ? kTop - 1 : cache.back() - 2;
    if (c % 2 == 0) --c;
    while (!is_prime32(c)) c -= 2;
    cache.push_back(c);
  }
  return cache[k];
}

ModRref rref_mod(const std::vector<IntRow>& rows, std::size_t cols, std::uint32_t p) {
  // p < 2^28, so a reduced value times a reduced value stays below 2^56 and up
  // to 2^7 such products can be accumulated in 64 bits before reducing.
  constexpr int kLazyBudget = 120;
  std::vector<std::vector<std::uint32_t>> piv_rows;
  std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
  std::vector<std::size_t> pivot_col;
  std::vector<std::uint64_t> tmp(cols);

  std::vector<std::size_t> source;
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    const auto& row = rows[ri];
    if (piv_rows.size() == cols) break;
    std::fill(tmp.begin(), tmp.end(), 0);
    for (std::size_t i = 0; i < row.cols.size(); ++i) {
      tmp[row.cols[i]] = mpz_fdiv_ui(row.vals[i].get_mpz_t(), p);
    }
    int pending = 0;
    std::size_t start = row.cols.empty() ? cols : row.cols.front();
    for (std::size_t j = start; j < cols; ++j) {
      if (tmp[j] == 0) continue;
      tmp[j] %= p;
      if (tmp[j] == 0 || pivot_of_col[j] < 0) continue;
      if (pending >= kLazyBudget) {
        for (std::size_t k = j; k < cols; ++k) tmp[k] %= p;
        pending = 0;
      }
      const std::uint64_t f = p - tmp[j];
      const auto& pr = piv_rows[static_cast<std::size_t>(pivot_of_col[j])];
      for (std::size_t k = j; k < cols; ++k) tmp[k] += f * pr[k];
      ++pending;
      tmp[j] = 0;
    }
    std::size_t lead = cols;
    for (std::size_t j = start; j < cols; ++j) {
      tmp[j] %= p;
      if (lead == cols && tmp[j] != 0) lead = j;
    }
    if (lead == cols) continue;
    const std::uint64_t inv = inverse(static_cast<std::uint32_t>(tmp[lead]), p);
    std::vector<std::uint32_t> nr(cols, 0);
    for (std::size_t k = lead; k < cols; ++k) nr[k] = static_cast<std::uint32_t>(tmp[k] * inv % p);
    pivot_of_col[lead] = static_cast<std::ptrdiff_t>(piv_rows.size());
    piv_rows.push_back(std::move(nr));
    pivot_col.push_back(lead);
    source.push_back(ri);
  }

  // Back substitution, largest pivot first.
  std::vector<std::size_t> order(piv_rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivot_col[a] < pivot_col[b]; });
  for (std::size_t oi = order.size(); oi-- > 0;) {
    const std::size_t r = order[oi];
    const std::size_t c = pivot_col[r];
    const auto& pr = piv_rows[r];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      auto& s = piv_rows[order[oj]];
      if (s[c] == 0) continue;
      const std::uint64_t f = p - s[c];
      for (std::size_t k = c; k < cols; ++k)
        if (pr[k] != 0) s[k] = static_cast<std::uint32_t>((s[k] + f * pr[k]) % p);
    }
  }

  ModRref out;
  out.p = p;
  out.source_rows = std::move(source);
  std::sort(out.source_rows.begin(), out.source_rows.end());
  for (auto idx : order) {
    out.pivots.push_back(pivot_col[idx]);
    out.rows.push_back(std::move(piv_rows[idx]));
  }
  return out;
}

std::optional<Rational> reconstruct(const Integer& a, const Integer& m) {
  // Wang's algorithm: run extended Euclid on (m, a) until the remainder drops
  // below sqrt(m/2).
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

}  // namespace octoplane::modular
