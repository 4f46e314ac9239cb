#include "octoplane/linalg.hpp"

#include "octoplane/modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace octoplane {

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) { return from_rows(cols).transpose(); }

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Rational RatMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool RatMatrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: shape mismatch in product");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("RatMatrix: shape mismatch in matrix-vector product");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in sum");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RatMatrix: shape mismatch in difference");
  RatMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

SparseRatMatrix SparseRatMatrix::from_dense(const RatMatrix& m) {
  SparseRatMatrix s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) row.emplace_back(static_cast<std::uint32_t>(c), m(r, c));
    s.rows.push_back(std::move(row));
  }
  return s;
}

RatMatrix SparseRatMatrix::to_dense() const {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

void SparseRatMatrix::add_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& [c, v] : row) {
    if (c >= cols) throw std::out_of_range("SparseRatMatrix::add_row: column out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  rows.push_back(std::move(merged));
}

// ---------------------------------------------------------------- nullspace

namespace {

using modular::IntRow;

std::vector<IntRow> to_primitive_rows(const SparseRatMatrix& m) {
  std::vector<IntRow> out;
  out.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    if (row.empty()) continue;
    Integer den = 1;
    for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    IntRow ir;
    Integer g = 0;
    for (const auto& [c, v] : row) {
      Integer x = v.get_num() * (den / v.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      ir.cols.push_back(c);
      ir.vals.push_back(std::move(x));
    }
    if (g != 1)
      for (auto& x : ir.vals) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(ir));
  }
  return out;
}

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  return free;
}

// Kernel basis read off an RREF given as rational rows.
std::vector<RatVector> kernel_from_rref(const std::vector<RatVector>& rref, const std::vector<std::size_t>& pivots,
                                        std::size_t cols) {
  std::vector<RatVector> basis;
  for (auto f : free_columns(pivots, cols)) {
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < rref.size(); ++r) {
      if (pivots[r] > f) break;
      if (sgn(rref[r][f]) != 0) v[pivots[r]] = -rref[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Dense fraction-free elimination, then rational back substitution.
std::vector<RatVector> nullspace_bareiss(const SparseRatMatrix& m, std::size_t* rank_out) {
  const std::size_t cols = m.cols;
  auto int_rows = to_primitive_rows(m);
  std::vector<std::vector<Integer>> a(int_rows.size(), std::vector<Integer>(cols));
  for (std::size_t r = 0; r < int_rows.size(); ++r)
    for (std::size_t i = 0; i < int_rows[r].cols.size(); ++i) a[r][int_rows[r].cols[i]] = int_rows[r].vals[i];

  const std::size_t nrows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  Integer t;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t sel = r;
    while (sel < nrows && a[sel][c] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(a[r], a[sel]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j];
        mpz_submul(t.get_mpz_t(), a[i][c].get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  if (rank_out) *rank_out = r;

  std::vector<RatVector> rref(r, RatVector(cols));
  for (std::size_t i = 0; i < r; ++i) {
    Rational inv(Integer(1), a[i][pivots[i]]);
    inv.canonicalize();
    for (std::size_t j = pivots[i]; j < cols; ++j)
      if (a[i][j] != 0) rref[i][j] = Rational(a[i][j]) * inv;
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t c = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (sgn(rref[k][c]) == 0) continue;
      const Rational f = rref[k][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(rref[i][j]) != 0) rref[k][j] -= f * rref[i][j];
    }
  }
  return kernel_from_rref(rref, pivots, cols);
}

// Exact check that every row annihilates every candidate vector.
bool verify_kernel(const std::vector<IntRow>& rows, const std::vector<RatVector>& basis) {
  Integer acc;
  std::vector<Integer> iv;
  for (const auto& v : basis) {
    const Integer den = common_denominator(v);
    iv.assign(v.size(), Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) iv[i] = v[i].get_num() * (den / v[i].get_den());
    for (const auto& row : rows) {
      acc = 0;
      for (std::size_t i = 0; i < row.cols.size(); ++i) {
        const Integer& x = iv[row.cols[i]];
        if (sgn(x) != 0) mpz_addmul(acc.get_mpz_t(), row.vals[i].get_mpz_t(), x.get_mpz_t());
      }
      if (sgn(acc) != 0) return false;
    }
  }
  return true;
}

constexpr std::size_t kMaxPrimes = 24;

// Multi-modular route. Returns nullopt if no consistent lift was found within
// the prime budget.
std::optional<std::vector<RatVector>> nullspace_multimodular(const SparseRatMatrix& m, std::size_t* rank_out) {
  const std::size_t cols = m.cols;
  const auto rows = to_primitive_rows(m);
  // After the first prime only rows that produced pivots are eliminated;
  // the final check still runs against every row.
  std::vector<IntRow> subset;
  bool use_subset = false;

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
  // residues[f][r]: entry of the kernel vector for free column f at pivot row r.
  std::vector<std::vector<Integer>> residues;
  Integer modulus = 1;
  bool have = false;

  for (std::size_t k = 0; k < kMaxPrimes; ++k) {
    const auto red = modular::rref_mod(use_subset ? subset : rows, cols, modular::prime(k));
    if (k == 0 && red.source_rows.size() < rows.size()) {
      for (auto i : red.source_rows) subset.push_back(rows[i]);
      use_subset = true;
    }
    const std::uint32_t p = red.p;
    if (have) {
      // A bad prime loses rank or pushes a pivot to a later column.
      if (red.pivots.size() < pivots.size()) continue;
      if (red.pivots.size() == pivots.size() &&
          std::lexicographical_compare(pivots.begin(), pivots.end(), red.pivots.begin(), red.pivots.end()))
        continue;
    }
    const bool restart = !have || red.pivots != pivots;
    have = true;
    if (restart) {
      pivots = red.pivots;
      free = free_columns(pivots, cols);
      residues.assign(free.size(), std::vector<Integer>(pivots.size()));
      modulus = 1;
    }
    // CRT step: x <- x + M * ((r - x) * M^{-1} mod p).
    Integer p_z = static_cast<unsigned long>(p);
    Integer m_inv;
    if (modulus != 1) {
      Integer m_mod = modulus % p_z;
      mpz_invert(m_inv.get_mpz_t(), m_mod.get_mpz_t(), p_z.get_mpz_t());
    }
    for (std::size_t fi = 0; fi < free.size(); ++fi) {
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint32_t e = red.rows[r][free[fi]];
        const unsigned long resid = e == 0 ? 0ul : static_cast<unsigned long>(p - e);  // -R[r][f]
        Integer& x = residues[fi][r];
        if (modulus == 1) {
          x = resid;
        } else {
          Integer diff = Integer(resid) - x;
          diff %= p_z;
          if (diff < 0) diff += p_z;
          Integer step = (diff * m_inv) % p_z;
          x += modulus * step;
        }
      }
    }
    modulus *= p_z;

    std::vector<RatVector> basis;
    bool ok = true;
    for (std::size_t fi = 0; fi < free.size() && ok; ++fi) {
      RatVector v(cols);
      v[free[fi]] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] > free[fi]) break;
        const auto q = modular::reconstruct(residues[fi][r], modulus);
        if (!q) {
          ok = false;
          break;
        }
        v[pivots[r]] = *q;
      }
      basis.push_back(std::move(v));
    }
    if (!ok) continue;
    if (verify_kernel(rows, basis)) {
      if (rank_out) *rank_out = pivots.size();
      return basis;
    }
    if (use_subset && verify_kernel(subset, basis)) {
      // The first prime chose a deficient row set; go back to all rows.
      use_subset = false;
      have = false;
    }
  }
  return std::nullopt;
}

constexpr std::size_t kBareissThreshold = 4096;  // rows * cols

}  // namespace

std::vector<RatVector> nullspace(const SparseRatMatrix& m, EliminationMethod method) {
  if (method == EliminationMethod::automatic)
    method = m.rows.size() * m.cols <= kBareissThreshold ? EliminationMethod::bareiss : EliminationMethod::multimodular;
  if (method == EliminationMethod::multimodular) {
    if (auto basis = nullspace_multimodular(m, nullptr)) return *basis;
  }
  return nullspace_bareiss(m, nullptr);
}

std::vector<RatVector> nullspace(const RatMatrix& m, EliminationMethod method) {
  return nullspace(SparseRatMatrix::from_dense(m), method);
}

std::size_t rank(const SparseRatMatrix& m, EliminationMethod method) {
  return m.cols - nullspace(m, method).size();
}

std::size_t rank_mod_prime(const SparseRatMatrix& m, std::size_t prime_index) {
  return modular::rref_mod(to_primitive_rows(m), m.cols, modular::prime(prime_index)).pivots.size();
}

std::size_t rank(const RatMatrix& m, EliminationMethod method) {
  return rank(SparseRatMatrix::from_dense(m), method);
}

// ---------------------------------------------------------------- signature

Signature symmetric_signature(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("symmetric_signature: matrix is not square and symmetric");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  Signature sig;

  auto congruence_add = [&](std::size_t dst, std::size_t src, const Rational& f) {
    // row_dst += f row_src; col_dst += f col_src
    for (std::size_t k = 0; k < n; ++k) a(dst, k) += f * a(src, k);
    for (std::size_t k = 0; k < n; ++k) a(k, dst) += f * a(k, src);
  };

  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](auto i) { return sgn(a(i, i)) != 0; });
    if (diag == live.end()) {
      // Zero diagonal: look for a hyperbolic pair and make a nonzero pivot.
      bool found = false;
      for (std::size_t x = 0; x < live.size() && !found; ++x)
        for (std::size_t y = x + 1; y < live.size() && !found; ++y)
          if (sgn(a(live[x], live[y])) != 0) {
            congruence_add(live[x], live[y], Rational(1));
            found = true;
          }
      if (!found) {
        sig.zeros += live.size();
        break;
      }
      continue;
    }
    const std::size_t piv = *diag;
    const Rational d = a(piv, piv);
    (sgn(d) > 0 ? sig.positives : sig.negatives)++;
    live.erase(diag);
    for (auto i : live) {
      if (sgn(a(i, piv)) == 0) continue;
      const Rational f = a(i, piv) / d;
      for (auto j : live) a(i, j) -= f * a(piv, j);
    }
    for (auto i : live) a(i, piv) = a(piv, i) = 0;
  }
  return sig;
}

// ---------------------------------------------------------------- echelon

Echelon row_echelon(const std::vector<RatVector>& vectors) {
  Echelon out;
  if (vectors.empty()) return out;
  const std::size_t cols = vectors.front().size();
  std::vector<RatVector> rows;
  for (const auto& v : vectors) {
    if (v.size() != cols) throw std::invalid_argument("row_echelon: ragged input");
    rows.push_back(v);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(rows[r][j]) != 0) rows[r][j] *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(rows[r][j]) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (auto j : nz) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

// ---------------------------------------------------------------- span solver

SpanSolver::SpanSolver(std::vector<RatVector> basis) : dim_(basis.size()) {
  if (basis.empty()) return;
  ambient_ = basis.front().size();
  for (const auto& b : basis)
    if (b.size() != ambient_) throw std::invalid_argument("SpanSolver: ragged basis");

  // Already RREF with pivots in order?
  std::vector<std::size_t> lead;
  for (const auto& b : basis) {
    auto it = std::find_if(b.begin(), b.end(), [](const Rational& q) { return sgn(q) != 0; });
    lead.push_back(static_cast<std::size_t>(it - b.begin()));
  }
  bool rref = std::is_sorted(lead.begin(), lead.end()) && std::adjacent_find(lead.begin(), lead.end()) == lead.end() &&
              lead.back() < ambient_;
  for (std::size_t i = 0; rref && i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (basis[i][lead[j]] != (i == j ? 1 : 0)) {
        rref = false;
        break;
      }

  std::vector<RatVector> ech;
  if (rref) {
    pivots_ = lead;
    ech = std::move(basis);
  } else {
    // Gauss-Jordan on [basis | I] restricted to the basis part.
    std::vector<RatVector> aug(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      aug[i] = basis[i];
      aug[i].resize(ambient_ + dim_);
      aug[i][ambient_ + i] = 1;
    }
    auto e = row_echelon(aug);
    std::size_t basis_rank = 0;
    for (auto p : e.pivots)
      if (p < ambient_) ++basis_rank;
    if (basis_rank != dim_) throw std::invalid_argument("SpanSolver: basis is linearly dependent");
    identity_transform_ = false;
    pivots_.assign(e.pivots.begin(), e.pivots.begin() + static_cast<std::ptrdiff_t>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
      ech.emplace_back(e.rows[i].begin(), e.rows[i].begin() + static_cast<std::ptrdiff_t>(ambient_));
      transform_.emplace_back(e.rows[i].begin() + static_cast<std::ptrdiff_t>(ambient_), e.rows[i].end());
    }
  }
  for (const auto& row : ech) {
    SparseRow s;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(row[j]) != 0) s.emplace_back(static_cast<std::uint32_t>(j), row[j]);
    echelon_.push_back(std::move(s));
  }
}

bool SpanSolver::try_coordinates(const RatVector& target, RatVector& echelon_coords) const {
  if (target.size() != ambient_ && dim_ > 0) throw std::invalid_argument("SpanSolver: target has wrong length");
  echelon_coords.assign(dim_, Rational(0));
  RatVector residual = target;
  for (std::size_t r = 0; r < dim_; ++r) {
    echelon_coords[r] = target[pivots_[r]];
    if (sgn(echelon_coords[r]) == 0) continue;
    for (const auto& [c, v] : echelon_[r]) residual[c] -= echelon_coords[r] * v;
  }
  return is_zero(residual);
}

RatVector SpanSolver::coordinates(const RatVector& target) const {
  RatVector e;
  if (!try_coordinates(target, e)) throw NotInSpan("SpanSolver: target is not in the span of the basis");
  if (identity_transform_) return e;
  RatVector c(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    if (sgn(e[r]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) c[j] += e[r] * transform_[r][j];
  }
  return c;
}

bool SpanSolver::contains(const RatVector& target) const {
  RatVector e;
  return try_coordinates(target, e);
}

RatVector solve_in_span(const std::vector<RatVector>& basis, const RatVector& target) {
  return SpanSolver(basis).coordinates(target);
}

bool span_contains(const std::vector<RatVector>& outer, const std::vector<RatVector>& inner) {
  if (inner.empty()) return true;
  auto joint = outer;
  joint.insert(joint.end(), inner.begin(), inner.end());
  return row_echelon(joint).rank() == row_echelon(outer).rank();
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
  auto joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  const auto rj = row_echelon(joint).rank();
  return rj == row_echelon(a).rank() && rj == row_echelon(b).rank();
}

}  // namespace octoplane
