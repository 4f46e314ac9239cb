#include "octoplane/octonion.hpp"

#include <stdexcept>
#include <vector>

namespace octoplane {
namespace {

// Signed-integer Cayley-Dickson product on coefficient vectors of length 2^n.
// params[level] is the doubling sign used at that level.
std::vector<int> cd_mul(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& params);

std::vector<int> cd_conj(const std::vector<int>& x) {
  std::vector<int> r(x.size());
  r[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

std::vector<int> cd_mul(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& params) {
  if (x.size() == 1) return {x[0] * y[0]};
  const std::size_t h = x.size() / 2;
  const std::vector<int> a(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(h)), b(x.begin() + static_cast<std::ptrdiff_t>(h), x.end());
  const std::vector<int> c(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(h)), d(y.begin() + static_cast<std::ptrdiff_t>(h), y.end());
  const std::vector<int> sub(params.begin(), params.end() - 1);
  const int mu = params.back();
  auto ac = cd_mul(a, c, sub);
  auto db = cd_mul(cd_conj(d), b, sub);
  auto da = cd_mul(d, a, sub);
  auto bc = cd_mul(b, cd_conj(c), sub);
  std::vector<int> r(x.size());
  for (std::size_t i = 0; i < h; ++i) {
    r[i] = ac[i] + mu * db[i];
    r[h + i] = da[i] + bc[i];
  }
  return r;
}

}  // namespace

CDAlgebra::CDAlgebra(int mu) : mu_(mu) {
  if (mu != 1 && mu != -1) throw std::invalid_argument("CDAlgebra: doubling sign must be +1 or -1");
  const std::vector<int> params{-1, -1, mu};
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      std::vector<int> ea(8, 0), eb(8, 0);
      ea[a] = 1;
      eb[b] = 1;
      auto p = cd_mul(ea, eb, params);
      int found = 0;
      for (std::size_t k = 0; k < 8; ++k)
        if (p[k] != 0) {
          table_[a][b] = Entry{static_cast<std::uint8_t>(k), static_cast<std::int8_t>(p[k])};
          ++found;
        }
      if (found != 1) throw std::logic_error("CDAlgebra: basis product is not a signed basis element");
    }
  for (std::size_t k = 0; k < 8; ++k) {
    // conj(i_k) i_k = metric * 1
    const auto e = table_[k][k];
    metric_[k] = k == 0 ? 1 : -e.sign;
  }
}

const CDAlgebra& CDAlgebra::octonions() {
  static const CDAlgebra alg(-1);
  return alg;
}

const CDAlgebra& CDAlgebra::split_octonions() {
  static const CDAlgebra alg(1);
  return alg;
}

const CDAlgebra& CDAlgebra::with_mu(int mu) {
  if (mu == -1) return octonions();
  if (mu == 1) return split_octonions();
  throw std::invalid_argument("CDAlgebra: doubling sign must be +1 or -1");
}

AlgElement AlgElement::unit(const CDAlgebra& alg, std::size_t k) {
  AlgElement e(alg);
  e.x_.at(k) = 1;
  return e;
}

AlgElement AlgElement::scalar(const CDAlgebra& alg, const Rational& s) {
  AlgElement e(alg);
  e.x_[0] = s;
  return e;
}

bool AlgElement::is_zero() const {
  for (const auto& c : x_)
    if (sgn(c) != 0) return false;
  return true;
}

void require_same_algebra(const AlgElement& a, const AlgElement& b) {
  if (&a.algebra() != &b.algebra()) throw std::invalid_argument("operands belong to different composition algebras");
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
  AlgElement r = *this;
  r += o;
  return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
  AlgElement r = *this;
  r -= o;
  return r;
}

AlgElement AlgElement::operator-() const {
  AlgElement r(*alg_);
  for (std::size_t k = 0; k < 8; ++k) r.x_[k] = -x_[k];
  return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  require_same_algebra(*this, o);
  for (std::size_t k = 0; k < 8; ++k) x_[k] += o.x_[k];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  require_same_algebra(*this, o);
  for (std::size_t k = 0; k < 8; ++k) x_[k] -= o.x_[k];
  return *this;
}

AlgElement AlgElement::operator*(const Rational& s) const {
  AlgElement r = *this;
  for (auto& c : r.x_) c *= s;
  return r;
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
  require_same_algebra(*this, o);
  AlgElement r(*alg_);
  for (std::size_t a = 0; a < 8; ++a) {
    if (sgn(x_[a]) == 0) continue;
    for (std::size_t b = 0; b < 8; ++b) {
      if (sgn(o.x_[b]) == 0) continue;
      const auto e = alg_->product(a, b);
      if (e.sign > 0)
        r.x_[e.index] += x_[a] * o.x_[b];
      else
        r.x_[e.index] -= x_[a] * o.x_[b];
    }
  }
  return r;
}

AlgElement mul(const AlgElement& a, const AlgElement& b) { return a * b; }

AlgElement conj(const AlgElement& a) {
  AlgElement r = -a;
  r[0] = a[0];
  return r;
}

Rational norm(const AlgElement& a) {
  Rational n = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    if (a.algebra().metric(k) > 0)
      n += a[k] * a[k];
    else
      n -= a[k] * a[k];
  }
  return n;
}

Rational inner(const AlgElement& a, const AlgElement& b) {
  require_same_algebra(a, b);
  Rational s = 0;
  for (std::size_t k = 0; k < 8; ++k) {
    if (a.algebra().metric(k) > 0)
      s += a[k] * b[k];
    else
      s -= a[k] * b[k];
  }
  return 2 * s;
}

AlgElement associator(const AlgElement& x, const AlgElement& y, const AlgElement& z) { return (x * y) * z - x * (y * z); }

}  // namespace octoplane
