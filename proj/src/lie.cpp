#include "octoplane/lie.hpp"

#include "octoplane/random.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

namespace octoplane {
namespace {

// ----------------------------------------------------------------- helpers

struct Position {
  std::size_t row, col;
};

// Endomorphisms of an n-dimensional space whose entries at `positions` are
// given by kernel vectors (all other entries zero).
std::vector<LinearEndo> endos_from_kernel(const std::vector<RatVector>& kernel, std::size_t n,
                                          const std::vector<Position>& positions) {
  std::vector<LinearEndo> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) {
    RatMatrix m(n, n);
    for (std::size_t u = 0; u < v.size(); ++u)
      if (sgn(v[u]) != 0) m(positions[u].row, positions[u].col) = v[u];
    out.push_back(LinearEndo{std::move(m)});
  }
  return out;
}

std::vector<Position> full_positions(std::size_t n) {
  std::vector<Position> p;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) p.push_back({r, c});
  return p;
}

RatVector flatten(const LinearEndo& e) { return e.matrix.entries(); }

LinearEndo unflatten(const RatVector& v, std::size_t n) { return LinearEndo{RatMatrix(n, n, v)}; }

// Reduced echelon basis of the span, as endomorphisms.
std::vector<LinearEndo> canonical_basis(const std::vector<LinearEndo>& basis) {
  if (basis.empty()) return {};
  const std::size_t n = basis.front().matrix.rows();
  std::vector<RatVector> flat;
  for (const auto& b : basis) flat.push_back(flatten(b));
  auto e = row_echelon(flat);
  std::vector<LinearEndo> out;
  for (auto& r : e.rows) out.push_back(unflatten(r, n));
  return out;
}

LieSubalgebra make_algebra(std::string label, const std::vector<LinearEndo>& basis, const CDAlgebra* alg) {
  if (basis.empty()) throw std::runtime_error(label + ": constraint system has only the zero solution");
  return LieSubalgebra(std::move(label), canonical_basis(basis), alg);
}

// Sparse row storage of a square matrix.
struct SparseEndo {
  std::size_t n = 0;
  std::vector<SparseRow> rows;

  explicit SparseEndo(const LinearEndo& e) : n(e.matrix.rows()), rows(n) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(e.matrix(r, c)) != 0) rows[r].emplace_back(static_cast<std::uint32_t>(c), e.matrix(r, c));
  }
};

void accumulate_product(const SparseEndo& a, const SparseEndo& b, const Rational& sign, RatVector& acc) {
  const std::size_t n = a.n;
  Rational t;
  for (std::size_t r = 0; r < n; ++r)
    for (const auto& [k, av] : a.rows[r]) {
      for (const auto& [c, bv] : b.rows[k]) {
        t = av * bv;
        if (sgn(sign) > 0)
          acc[r * n + c] += t;
        else
          acc[r * n + c] -= t;
      }
    }
}

RatVector commutator_flat(const SparseEndo& a, const SparseEndo& b) {
  RatVector acc(a.n * a.n);
  accumulate_product(a, b, Rational(1), acc);
  accumulate_product(b, a, Rational(-1), acc);
  return acc;
}

// Inner-product weights of the algebra basis: <i_a, i_b> = 2 g_a delta_ab.
Rational basis_inner(const CDAlgebra& alg, std::size_t a) { return 2 * alg.metric(a); }

// Skewness rows for a block of unknowns T[a][b] at offset + 8a + b.
void add_skew_rows(const CDAlgebra& alg, std::size_t offset, SparseRatMatrix& m) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) {
      // <T e_i, e_j> + <e_i, T e_j> = g_j T[j][i] + g_i T[i][j] (times 2)
      SparseRow row;
      row.emplace_back(static_cast<std::uint32_t>(offset + 8 * j + i), basis_inner(alg, j));
      row.emplace_back(static_cast<std::uint32_t>(offset + 8 * i + j), basis_inner(alg, i));
      m.add_row(std::move(row));
    }
}

// Rows of T1(e_i e_j) - T2(e_i) e_j - e_i T3(e_j) = 0, with the three maps at
// the given unknown offsets (equal offsets give the derivation condition).
void add_leibniz_rows(const CDAlgebra& alg, std::size_t o1, std::size_t o2, std::size_t o3, SparseRatMatrix& m) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      std::map<std::size_t, SparseRow> rows;
      const auto ij = alg.product(i, j);
      // T1(s e_k) component r: s T1[r][k]
      for (std::size_t r = 0; r < 8; ++r) rows[r].emplace_back(static_cast<std::uint32_t>(o1 + 8 * r + ij.index), ij.sign);
      for (std::size_t mm = 0; mm < 8; ++mm) {
        const auto mj = alg.product(mm, j);  // T2(e_i) = sum_m T2[m][i] e_m
        rows[mj.index].emplace_back(static_cast<std::uint32_t>(o2 + 8 * mm + i), -mj.sign);
        const auto im = alg.product(i, mm);  // T3(e_j) = sum_m T3[m][j] e_m
        rows[im.index].emplace_back(static_cast<std::uint32_t>(o3 + 8 * mm + j), -im.sign);
      }
      for (auto& [r, row] : rows) m.add_row(std::move(row));
    }
}

JordanElement jordan_unit(const CDAlgebra& alg, std::size_t a, Gamma gamma) {
  RatVector c(kVDim);
  c[a] = 1;
  return JordanElement::from_coords(alg, c, gamma);
}

// Coordinates of e_a * e_b (Freudenthal), or e_a o e_b, for all pairs.
std::vector<RatVector> pair_table(const CDAlgebra& alg, Gamma gamma, bool cross) {
  std::vector<RatVector> t(kVDim * kVDim);
  std::vector<JordanElement> e;
  for (std::size_t a = 0; a < kVDim; ++a) e.push_back(jordan_unit(alg, a, gamma));
  for (std::size_t a = 0; a < kVDim; ++a)
    for (std::size_t b = a; b < kVDim; ++b) {
      t[a * kVDim + b] = (cross ? freudenthal(e[a], e[b]) : jordan_mul(e[a], e[b])).coords();
      t[b * kVDim + a] = t[a * kVDim + b];
    }
  return t;
}

// Diagonal of the trace form in the coordinate basis.
RatVector trace_weights(const CDAlgebra& alg, Gamma gamma) {
  RatVector w(kVDim);
  for (std::size_t a = 0; a < kVDim; ++a) {
    const auto e = jordan_unit(alg, a, gamma);
    w[a] = trace_form(e, e);
  }
  return w;
}

std::uint32_t unknown27(std::size_t r, std::size_t c) { return static_cast<std::uint32_t>(r * kVDim + c); }

}  // namespace

// ------------------------------------------------------------ LinearEndo

LinearEndo bracket(const LinearEndo& a, const LinearEndo& b) {
  if (a.matrix.rows() != b.matrix.rows() || !a.matrix.square() || !b.matrix.square())
    throw std::invalid_argument("bracket: incompatible endomorphisms");
  return LinearEndo{a.matrix * b.matrix - b.matrix * a.matrix};
}

TrialityTriple split_triple(const LinearEndo& e) {
  if (e.matrix.rows() != 24) throw std::invalid_argument("split_triple: expected a 24x24 block matrix");
  std::array<RatMatrix, 3> t{RatMatrix(8, 8), RatMatrix(8, 8), RatMatrix(8, 8)};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) t[k](a, b) = e.matrix(8 * k + a, 8 * k + b);
  return TrialityTriple{LinearEndo{t[0]}, LinearEndo{t[1]}, LinearEndo{t[2]}};
}

// ---------------------------------------------------------- LieSubalgebra

LieSubalgebra::LieSubalgebra(std::string label, std::vector<LinearEndo> basis, const CDAlgebra* algebra)
    : label_(std::move(label)), basis_(std::move(basis)), algebra_(algebra) {
  if (basis_.empty()) throw std::invalid_argument("LieSubalgebra: zero-dimensional algebra");
  ambient_ = basis_.front().matrix.rows();
  for (const auto& b : basis_)
    if (!b.matrix.square() || b.matrix.rows() != ambient_)
      throw std::invalid_argument("LieSubalgebra: basis elements must be square of equal size");
  solver_.emplace(flat_basis());

  const std::size_t n = dim();
  std::vector<SparseEndo> sparse;
  sparse.reserve(n);
  for (const auto& b : basis_) sparse.emplace_back(b);

  structure_.assign(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVector c;
      try {
        c = solver_->coordinates(commutator_flat(sparse[i], sparse[j]));
      } catch (const NotInSpan&) {
        throw NotClosed(label_ + ": bracket of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                        " leaves the span");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(c[k]) == 0) continue;
        structure_[(i * n + j) * n + k] = c[k];
        structure_[(j * n + i) * n + k] = -c[k];
      }
    }

  // ad_i has matrix M_i[k][l] = c(i, l, k); B(i, j) = tr(M_i M_j).
  struct Entry {
    std::size_t k, l;
    const Rational* v;
  };
  std::vector<std::vector<Entry>> ad(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = structure_[(i * n + l) * n + k];
        if (sgn(v) != 0) ad[i].push_back({k, l, &v});
      }
  killing_ = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational s = 0;
      for (const auto& e : ad[i]) {
        const Rational& w = structure_[(j * n + e.k) * n + e.l];
        if (sgn(w) != 0) s += *e.v * w;
      }
      killing_(i, j) = s;
      killing_(j, i) = s;
    }
  signature_ = symmetric_signature(killing_);
  name_ = identify(n, signature_.character());
}

std::vector<RatVector> LieSubalgebra::flat_basis() const {
  std::vector<RatVector> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(flatten(b));
  return out;
}

RatVector LieSubalgebra::coordinates(const LinearEndo& e) const {
  if (e.matrix.rows() != ambient_ || !e.matrix.square())
    throw std::invalid_argument("LieSubalgebra::coordinates: wrong ambient size");
  return solver_->coordinates(flatten(e));
}

bool LieSubalgebra::contains(const LinearEndo& e) const {
  if (e.matrix.rows() != ambient_ || !e.matrix.square()) return false;
  return solver_->contains(flatten(e));
}

Echelon LieSubalgebra::echelon() const { return row_echelon(flat_basis()); }

std::string LieSubalgebra::basis_digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& row : echelon().rows) {
    for (const auto& q : row) {
      feed(q.get_str());
      feed(",");
    }
    feed(";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string identify(std::size_t dim, long character) {
  static const std::map<std::pair<std::size_t, long>, std::string> table{
      {{14, -14}, "g2(-14)"}, {{14, 2}, "g2(2)"},     {{28, -28}, "so(8)"},     {{28, 4}, "so(4,4)"},
      {{36, -36}, "so(9)"},   {{36, -20}, "so(8,1)"}, {{36, 4}, "so(5,4)"},     {{52, -52}, "f4(-52)"},
      {{52, -20}, "f4(-20)"}, {{52, 4}, "f4(4)"},     {{78, -26}, "e6(-26)"},   {{78, 6}, "e6(6)"},
      {{78, 2}, "e6(2)"},     {{78, -14}, "e6(-14)"}, {{78, -78}, "e6(-78)"},
  };
  auto it = table.find({dim, character});
  if (it != table.end()) return it->second;
  return "unidentified(" + std::to_string(dim) + ", " + std::to_string(character) + ")";
}

LieSubalgebra remixed(const LieSubalgebra& sub, std::uint64_t seed) {
  Sampler s(seed);
  const std::size_t n = sub.dim();
  // R = lower-unitriangular * upper-unitriangular, hence invertible.
  RatMatrix lo = RatMatrix::identity(n), up = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = s.integer(-2, 2);
      up(j, i) = s.integer(-2, 2);
    }
  const RatMatrix r = lo * up;
  std::vector<LinearEndo> mixed;
  for (std::size_t i = 0; i < n; ++i) {
    RatMatrix m(sub.ambient_dim(), sub.ambient_dim());
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(r(i, j)) != 0) m = m + sub.basis()[j].matrix.scaled(r(i, j));
    mixed.push_back(LinearEndo{std::move(m)});
  }
  return LieSubalgebra(sub.label() + " (remixed)", std::move(mixed), sub.algebra());
}

// ---------------------------------------------------------- constructions

LieSubalgebra so_of_form(const CDAlgebra& alg) {
  SparseRatMatrix m(64);
  add_skew_rows(alg, 0, m);
  return make_algebra("so(" + alg.name() + ")", endos_from_kernel(nullspace(m), 8, full_positions(8)), &alg);
}

LieSubalgebra derivations_of_algebra(const CDAlgebra& alg) {
  SparseRatMatrix m(64);
  add_skew_rows(alg, 0, m);
  add_leibniz_rows(alg, 0, 0, 0, m);
  return make_algebra("der(" + alg.name() + ")", endos_from_kernel(nullspace(m), 8, full_positions(8)), &alg);
}

namespace {

std::vector<Position> triality_positions() {
  std::vector<Position> p;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) p.push_back({8 * k + a, 8 * k + b});
  return p;
}

SparseRatMatrix triality_system(const CDAlgebra& alg) {
  SparseRatMatrix m(192);
  for (std::size_t k = 0; k < 3; ++k) add_skew_rows(alg, 64 * k, m);
  add_leibniz_rows(alg, 0, 64, 128, m);
  return m;
}

}  // namespace

LieSubalgebra triality_algebra(const CDAlgebra& alg) {
  return make_algebra("tri(" + alg.name() + ")", endos_from_kernel(nullspace(triality_system(alg)), 24,
                                                                   triality_positions()),
                      &alg);
}

LieSubalgebra triality_diagonal(const CDAlgebra& alg) {
  SparseRatMatrix m = triality_system(alg);
  for (std::size_t u = 0; u < 64; ++u) {
    m.add_row({{static_cast<std::uint32_t>(u), Rational(1)}, {static_cast<std::uint32_t>(64 + u), Rational(-1)}});
    m.add_row({{static_cast<std::uint32_t>(u), Rational(1)}, {static_cast<std::uint32_t>(128 + u), Rational(-1)}});
  }
  auto kernel = nullspace(m);
  for (auto& v : kernel) v.resize(64);
  return make_algebra("tri(" + alg.name() + ") diagonal", endos_from_kernel(kernel, 8, full_positions(8)), &alg);
}

std::vector<LinearEndo> triality_projection(const LieSubalgebra& tri) {
  std::vector<LinearEndo> out;
  for (const auto& b : tri.basis()) out.push_back(split_triple(b).t1);
  return out;
}

LieSubalgebra jordan_derivations(const CDAlgebra& alg, Gamma gamma) {
  const auto p = pair_table(alg, gamma, false);
  auto at = [&](std::size_t a, std::size_t b) -> const RatVector& { return p[a * kVDim + b]; };
  SparseRatMatrix m(kVDim * kVDim);
  for (std::size_t i = 0; i < kVDim; ++i)
    for (std::size_t j = i; j < kVDim; ++j)
      for (std::size_t n = 0; n < kVDim; ++n) {
        // (D(e_i o e_j))_n - (D e_i o e_j)_n - (e_i o D e_j)_n
        SparseRow row;
        for (std::size_t k = 0; k < kVDim; ++k)
          if (sgn(at(i, j)[k]) != 0) row.emplace_back(unknown27(n, k), at(i, j)[k]);
        for (std::size_t mm = 0; mm < kVDim; ++mm) {
          if (sgn(at(mm, j)[n]) != 0) row.emplace_back(unknown27(mm, i), -at(mm, j)[n]);
          if (sgn(at(i, mm)[n]) != 0) row.emplace_back(unknown27(mm, j), -at(i, mm)[n]);
        }
        m.add_row(std::move(row));
      }
  return make_algebra("der(J3(" + alg.name() + ")," + to_string(gamma) + ")",
                      endos_from_kernel(nullspace(m), kVDim, full_positions(kVDim)), &alg);
}

LieSubalgebra det_preserving_algebra(const CDAlgebra& alg) {
  const auto f = pair_table(alg, kGammaEuclidean, true);
  const auto w = trace_weights(alg, kGammaEuclidean);
  // (e_i, e_j, e_k) = T(e_i, e_j * e_k)
  auto tri = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational { return w[i] * f[j * kVDim + k][i]; };
  SparseRatMatrix m(kVDim * kVDim);
  for (std::size_t i = 0; i < kVDim; ++i)
    for (std::size_t j = i; j < kVDim; ++j)
      for (std::size_t k = j; k < kVDim; ++k) {
        SparseRow row;
        for (std::size_t mm = 0; mm < kVDim; ++mm) {
          Rational t = tri(mm, j, k);
          if (sgn(t) != 0) row.emplace_back(unknown27(mm, i), t);
          t = tri(i, mm, k);
          if (sgn(t) != 0) row.emplace_back(unknown27(mm, j), t);
          t = tri(i, j, mm);
          if (sgn(t) != 0) row.emplace_back(unknown27(mm, k), t);
        }
        m.add_row(std::move(row));
      }
  return make_algebra("coll(" + alg.name() + "P2)", endos_from_kernel(nullspace(m), kVDim, full_positions(kVDim)),
                      &alg);
}

namespace {

void add_cone_rows(const CDAlgebra& alg, const std::vector<RatVector>& f, Sampler& s, std::size_t count,
                   SparseRatMatrix& m) {
  for (std::size_t t = 0; t < count; ++t) {
    const RatVector wv = s.veronese_vector(alg).coords();
    // g[a] = e_a * w
    std::vector<RatVector> g(kVDim, RatVector(kVDim));
    for (std::size_t a = 0; a < kVDim; ++a)
      for (std::size_t c = 0; c < kVDim; ++c) {
        if (sgn(wv[c]) == 0) continue;
        const RatVector& fa = f[a * kVDim + c];
        for (std::size_t n = 0; n < kVDim; ++n)
          if (sgn(fa[n]) != 0) g[a][n] += wv[c] * fa[n];
      }
    // ((L w) * w)_n = sum_{a,b} L[a][b] w_b g[a][n]
    for (std::size_t n = 0; n < kVDim; ++n) {
      SparseRow row;
      for (std::size_t a = 0; a < kVDim; ++a) {
        if (sgn(g[a][n]) == 0) continue;
        for (std::size_t b = 0; b < kVDim; ++b)
          if (sgn(wv[b]) != 0) row.emplace_back(unknown27(a, b), wv[b] * g[a][n]);
      }
      m.add_row(std::move(row));
    }
  }
}

}  // namespace

ConeTangentResult cone_tangent_algebra(const CDAlgebra& alg, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count < 30) throw std::invalid_argument("cone_tangent_algebra: need at least 30 samples");
  constexpr std::size_t kMaxBatches = 8;
  const auto f = pair_table(alg, kGammaEuclidean, true);
  SparseRatMatrix m(kVDim * kVDim);
  ConeTangentResult r;
  r.samples_per_batch = sample_count;
  r.under_constrained = true;
  for (std::size_t batch = 0; batch < kMaxBatches; ++batch) {
    Sampler s(seed + 0x9e3779b97f4a7c15ULL * batch);
    add_cone_rows(alg, f, s, sample_count, m);
    r.batch_dims.push_back(kVDim * kVDim - rank_mod_prime(m));
    const auto n = r.batch_dims.size();
    if (n >= 2 && r.batch_dims[n - 1] == r.batch_dims[n - 2]) {
      r.under_constrained = false;
      break;
    }
  }
  r.basis = endos_from_kernel(nullspace(m), kVDim, full_positions(kVDim));
  return r;
}

std::vector<LinearEndo> trace_zero_part(const std::vector<LinearEndo>& basis) {
  std::vector<LinearEndo> out;
  for (const auto& b : basis) {
    const std::size_t n = b.matrix.rows();
    const Rational t = b.matrix.trace() / static_cast<long>(n);
    out.push_back(LinearEndo{b.matrix - RatMatrix::identity(n).scaled(t)});
  }
  return canonical_basis(out);
}

RatMatrix form_gram(const CDAlgebra& alg, FormKind form) {
  RatVector d(kVDim);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    // beta_minus flips the x1, x2 terms; the literal slot-3 flip also hits l3.
    int sign = 1;
    if (form == FormKind::beta_minus && nu < 2) sign = -1;
    if (form == FormKind::beta_flip_slot3 && nu == 2) sign = -1;
    d[lambda_index(nu)] = form == FormKind::beta_flip_slot3 ? sign : 1;
    for (std::size_t k = 0; k < 8; ++k) d[x_index(nu, k)] = 2 * sign * alg.metric(k);
  }
  return RatMatrix::diagonal(d);
}

namespace {

// Elements sum_t c_t b_t of the parent whose image under `constraint` vanishes.
LieSubalgebra restrict_parent(const LieSubalgebra& parent, std::string label,
                              const std::function<RatVector(const LinearEndo&)>& constraint) {
  const std::size_t n = parent.dim();
  std::vector<RatVector> cols;
  for (const auto& b : parent.basis()) cols.push_back(constraint(b));
  SparseRatMatrix m(n);
  for (std::size_t r = 0; r < cols.front().size(); ++r) {
    SparseRow row;
    for (std::size_t t = 0; t < n; ++t)
      if (sgn(cols[t][r]) != 0) row.emplace_back(static_cast<std::uint32_t>(t), cols[t][r]);
    m.add_row(std::move(row));
  }
  std::vector<LinearEndo> basis;
  for (const auto& c : nullspace(m)) {
    RatMatrix acc(parent.ambient_dim(), parent.ambient_dim());
    for (std::size_t t = 0; t < n; ++t)
      if (sgn(c[t]) != 0) acc = acc + parent.basis()[t].matrix.scaled(c[t]);
    basis.push_back(LinearEndo{std::move(acc)});
  }
  return make_algebra(std::move(label), basis, parent.algebra());
}

}  // namespace

LieSubalgebra form_preserving_subalgebra(const LieSubalgebra& parent, FormKind form) {
  if (parent.ambient_dim() != kVDim || parent.algebra() == nullptr)
    throw std::invalid_argument("form_preserving_subalgebra: parent must act on V");
  const RatMatrix g = form_gram(*parent.algebra(), form);
  static const char* names[] = {"beta", "beta_minus", "beta_flip_slot3"};
  return restrict_parent(parent, parent.label() + " preserving " + names[static_cast<int>(form)],
                         [&g](const LinearEndo& l) {
                           RatVector v;
                           for (std::size_t i = 0; i < kVDim; ++i)
                             for (std::size_t j = i; j < kVDim; ++j)
                               v.push_back(g(i, i) * l.matrix(i, j) + g(j, j) * l.matrix(j, i));
                           return v;
                         });
}

LieSubalgebra stabilizer_subalgebra(const LieSubalgebra& parent, const JordanElement& x) {
  if (parent.ambient_dim() != kVDim) throw std::invalid_argument("stabilizer_subalgebra: parent must act on V");
  if (parent.algebra() != nullptr && parent.algebra() != &x.algebra())
    throw std::invalid_argument("stabilizer_subalgebra: element over a different algebra");
  const RatVector xc = x.coords();
  return restrict_parent(parent, parent.label() + " stabilizer", [&xc](const LinearEndo& l) { return l.apply(xc); });
}

LieSubalgebra projective_stabilizer(const LieSubalgebra& parent, const std::vector<VElement>& points,
                                    const std::string& label) {
  if (parent.ambient_dim() != kVDim) throw std::invalid_argument("projective_stabilizer: parent must act on V");
  std::vector<RatVector> coords;
  for (const auto& w : points) {
    if (w.is_zero()) throw std::invalid_argument("projective_stabilizer: zero vector");
    coords.push_back(w.coords());
  }
  return restrict_parent(parent, label, [&coords](const LinearEndo& l) {
    // (Lw)_n w_p - (Lw)_p w_n = 0 with p the first nonzero coordinate of w.
    RatVector v;
    for (const auto& w : coords) {
      const RatVector lw = l.apply(w);
      std::size_t p = 0;
      while (sgn(w[p]) == 0) ++p;
      for (std::size_t n = 0; n < kVDim; ++n)
        if (n != p) v.push_back(lw[n] * w[p] - lw[p] * w[n]);
    }
    return v;
  });
}

}  // namespace octoplane
