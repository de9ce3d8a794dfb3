#include "qhall/ihall.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qhall/triangle.hpp"

namespace qhall {

namespace {

long fp_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return ((t % p) + p) % p;
}

// in-place reduced row echelon; returns pivot column per kept row
std::vector<int> fp_rref(std::vector<std::vector<int>>& rows, long p) {
  std::vector<int> piv;
  if (rows.empty()) return piv;
  int nc = static_cast<int>(rows[0].size());
  size_t r = 0;
  for (int c = 0; c < nc && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    long inv = fp_inv(rows[r][c], p);
    for (int k = 0; k < nc; ++k) rows[r][k] = static_cast<int>(rows[r][k] * inv % p);
    for (size_t j = 0; j < rows.size(); ++j) {
      if (j == r) continue;
      long f = rows[j][c] % p;
      if (!f) continue;
      for (int k = 0; k < nc; ++k)
        rows[j][k] = static_cast<int>((((rows[j][k] - f * rows[r][k]) % p) + p) % p);
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

std::vector<std::vector<int>> fp_nullspace(const std::vector<std::vector<int>>& rows_in,
                                           int nvars, long p) {
  auto rows = rows_in;
  for (auto& r : rows)
    for (auto& x : r) x = static_cast<int>(((x % p) + p) % p);
  std::vector<int> piv = fp_rref(rows, p);
  std::vector<char> isp(nvars, 0);
  for (int c : piv) isp[c] = 1;
  std::vector<std::vector<int>> out;
  for (int c = 0; c < nvars; ++c) {
    if (isp[c]) continue;
    std::vector<int> v(nvars, 0);
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = static_cast<int>(((-rows[r][c]) % p + p) % p);
    out.push_back(std::move(v));
  }
  return out;
}

// kernel basis of A as columns
FpMat fp_kernel(const FpMat& a, long p) {
  std::vector<std::vector<int>> rows(a.a);
  auto ns = fp_nullspace(rows, a.cols, p);
  FpMat k(a.cols, static_cast<int>(ns.size()));
  for (size_t j = 0; j < ns.size(); ++j)
    for (int i = 0; i < a.cols; ++i) k.a[i][j] = ns[j][i];
  return k;
}

// solve A X = B columnwise; throws when inconsistent
FpMat fp_solve(const FpMat& a, const FpMat& b, long p) {
  std::vector<std::vector<int>> rows(a.rows, std::vector<int>(a.cols + b.cols, 0));
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) rows[i][j] = a.a[i][j];
    for (int j = 0; j < b.cols; ++j) rows[i][a.cols + j] = b.a[i][j];
  }
  auto piv = fp_rref(rows, p);
  FpMat x(a.cols, b.cols);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= a.cols) throw std::runtime_error("inconsistent linear system");
    for (int j = 0; j < b.cols; ++j) x.a[piv[r]][j] = rows[r][a.cols + j];
  }
  return x;
}

FpMat fp_inverse(const FpMat& a, long p) {
  FpMat id(a.rows, a.rows);
  for (int i = 0; i < a.rows; ++i) id.a[i][i] = 1;
  return fp_solve(a, id, p);
}

FqRep zero_rep(int n) {
  FqRep r;
  r.dims.assign(n, 0);
  return r;
}

bool rep_is_zero(const FqRep& r) {
  for (int d : r.dims)
    if (d) return false;
  return true;
}

void conform_mats(const Quiver& q, FqRep& r) {
  r.mats.assign(q.arrows.size(), FpMat());
  for (size_t a = 0; a < q.arrows.size(); ++a)
    r.mats[a] = FpMat(r.dims[q.arrows[a].second], r.dims[q.arrows[a].first]);
}

// basis of intertwiners m -> n as per-vertex matrices
std::vector<std::vector<FpMat>> hom_space(const Quiver& q, long p, const FqRep& m,
                                          const FqRep& n) {
  int nv = q.n;
  std::vector<int> off(nv + 1, 0);
  for (int i = 0; i < nv; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  int nvars = off[nv];
  std::vector<std::vector<int>> rows;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        std::vector<int> row(nvars, 0);
        // (f_t M_a - N_a f_s)[r][c]
        for (int k = 0; k < m.dims[t]; ++k)
          row[off[t] + r * m.dims[t] + k] =
              static_cast<int>((row[off[t] + r * m.dims[t] + k] + m.mats[a].a[k][c]) % p);
        for (int k = 0; k < n.dims[s]; ++k)
          row[off[s] + k * m.dims[s] + c] = static_cast<int>(
              ((row[off[s] + k * m.dims[s] + c] - n.mats[a].a[r][k]) % p + p) % p);
        rows.push_back(std::move(row));
      }
  }
  auto ns = fp_nullspace(rows, nvars, p);
  std::vector<std::vector<FpMat>> out;
  for (auto& v : ns) {
    std::vector<FpMat> f(nv);
    for (int i = 0; i < nv; ++i) {
      f[i] = FpMat(n.dims[i], m.dims[i]);
      for (int r = 0; r < n.dims[i]; ++r)
        for (int c = 0; c < m.dims[i]; ++c) f[i].a[r][c] = v[off[i] + r * m.dims[i] + c];
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool vertexwise_invertible(const std::vector<FpMat>& f, long p) {
  for (auto& mat : f) {
    if (mat.rows != mat.cols) return false;
    if (fp_rank(mat, p) != mat.rows) return false;
  }
  return true;
}

bool certified_iso(const Quiver& q, long p, const FqRep& m, const FqRep& n) {
  if (m.dims != n.dims) return false;
  if (rep_is_zero(m)) return true;
  auto basis = hom_space(q, p, m, n);
  int k = static_cast<int>(basis.size());
  if (k == 0) return false;
  auto combine = [&](const std::vector<long>& c) {
    std::vector<FpMat> f(q.n);
    for (int i = 0; i < q.n; ++i) {
      f[i] = FpMat(n.dims[i], m.dims[i]);
      for (int j = 0; j < k; ++j) {
        if (!c[j]) continue;
        for (int r = 0; r < n.dims[i]; ++r)
          for (int cc = 0; cc < m.dims[i]; ++cc)
            f[i].a[r][cc] =
                static_cast<int>((f[i].a[r][cc] + c[j] * basis[j][i].a[r][cc]) % p);
      }
    }
    return f;
  };
  double total = 1;
  for (int j = 0; j < k && total <= 50000; ++j) total *= static_cast<double>(p);
  if (total <= 50000) {
    std::vector<long> c(k, 0);
    while (true) {
      if (vertexwise_invertible(combine(c), p)) return true;
      int j = 0;
      while (j < k && ++c[j] == p) c[j++] = 0;
      if (j == k) return false;
    }
  }
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<long> pick(0, p - 1);
  for (int t = 0; t < 3000; ++t) {
    std::vector<long> c(k);
    for (auto& x : c) x = pick(rng);
    if (vertexwise_invertible(combine(c), p)) return true;
  }
  return false;
}

// cocycle coset data for extensions of M (quotient) by N (sub)
struct ExtFrame {
  std::vector<int> off;                     // variable offset per arrow
  std::vector<std::pair<int, int>> shape;   // (rows, cols) per arrow block
  int nvars = 0;
  std::vector<std::vector<int>> comp;       // coset representatives of Ext^1
};

ExtFrame ext_frame(const IQuiverAlgebra& lam, long p, const FqRep& m, const FqRep& n) {
  const Quiver& q = lam.qbar;
  ExtFrame fr;
  fr.off.assign(q.arrows.size() + 1, 0);
  fr.shape.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    fr.shape[a] = {n.dims[t], m.dims[s]};
    fr.off[a + 1] = fr.off[a] + n.dims[t] * m.dims[s];
  }
  fr.nvars = fr.off[q.arrows.size()];
  auto at = [&](size_t a, int r, int c) { return fr.off[a] + r * fr.shape[a].second + c; };
  std::vector<std::vector<int>> rows;
  for (auto& rel : lam.relations) {
    int s0 = q.arrows[rel[0].first].first;
    int t1 = q.arrows[rel[0].second].second;
    for (int r = 0; r < n.dims[t1]; ++r)
      for (int c = 0; c < m.dims[s0]; ++c) {
        std::vector<int> row(fr.nvars, 0);
        bool any = false;
        for (auto& tm : rel) {
          int a1 = tm.first, a2 = tm.second;
          long cf = ((tm.coeff % p) + p) % p;
          int mid_n = n.dims[q.arrows[a1].second];
          int mid_m = m.dims[q.arrows[a1].second];
          // N_{a2} z_{a1} + z_{a2} M_{a1}, block (r, c)
          for (int k = 0; k < mid_n; ++k) {
            long v = cf * n.mats[a2].a[r][k] % p;
            if (v) { row[at(a1, k, c)] = static_cast<int>((row[at(a1, k, c)] + v) % p); any = true; }
          }
          for (int k = 0; k < mid_m; ++k) {
            long v = cf * m.mats[a1].a[k][c] % p;
            if (v) { row[at(a2, r, k)] = static_cast<int>((row[at(a2, r, k)] + v) % p); any = true; }
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  }
  auto zbasis = fp_nullspace(rows, fr.nvars, p);
  // coboundaries z_a = N_a h_{s(a)} - h_{t(a)} M_a
  std::vector<std::vector<int>> bgens;
  for (int i = 0; i < q.n; ++i)
    for (int r = 0; r < n.dims[i]; ++r)
      for (int c = 0; c < m.dims[i]; ++c) {
        std::vector<int> v(fr.nvars, 0);
        bool any = false;
        for (size_t a = 0; a < q.arrows.size(); ++a) {
          auto [s, t] = q.arrows[a];
          if (s == i)
            for (int x = 0; x < n.dims[t]; ++x)
              if (n.mats[a].a[x][r]) { v[at(a, x, c)] = n.mats[a].a[x][r]; any = true; }
          if (t == i)
            for (int y = 0; y < m.dims[s]; ++y)
              if (m.mats[a].a[c][y]) {
                v[at(a, r, y)] = static_cast<int>(((v[at(a, r, y)] - m.mats[a].a[c][y]) % p + p) % p);
                any = true;
              }
        }
        if (any) bgens.push_back(std::move(v));
      }
  fp_rref(bgens, p);
  for (auto& z : zbasis) {
    // reduce against the coboundary span; keep when a new pivot appears
    auto v = z;
    for (auto& b : bgens) {
      int pc = 0;
      while (pc < fr.nvars && !b[pc]) ++pc;
      if (pc == fr.nvars || !v[pc]) continue;
      long f = v[pc];
      for (int k = 0; k < fr.nvars; ++k)
        v[k] = static_cast<int>(((v[k] - f * b[k]) % p + p) % p);
    }
    int pc = 0;
    while (pc < fr.nvars && !v[pc]) ++pc;
    if (pc == fr.nvars) continue;
    fr.comp.push_back(v);
    bgens.push_back(std::move(v));
    fp_rref(bgens, p);
  }
  return fr;
}

FqRep ext_middle(const IQuiverAlgebra& lam, const FqRep& m, const FqRep& n,
                 const ExtFrame& fr, const std::vector<int>& z) {
  const Quiver& q = lam.qbar;
  FqRep e;
  e.dims.resize(q.n);
  for (int i = 0; i < q.n; ++i) e.dims[i] = n.dims[i] + m.dims[i];
  e.mats.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    FpMat x(e.dims[t], e.dims[s]);
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < n.dims[s]; ++c) x.a[r][c] = n.mats[a].a[r][c];
    for (int r = 0; r < m.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c)
        x.a[n.dims[t] + r][n.dims[s] + c] = m.mats[a].a[r][c];
    for (int r = 0; r < fr.shape[a].first; ++r)
      for (int c = 0; c < fr.shape[a].second; ++c)
        x.a[r][n.dims[s] + c] = z[fr.off[a] + r * fr.shape[a].second + c];
    e.mats[a] = std::move(x);
  }
  return e;
}

Rational qpow(long q, long k) {
  BigInt b = 1;
  for (long i = 0; i < (k < 0 ? -k : k); ++i) b *= q;
  return k >= 0 ? Rational(b) : Rational(1, b);
}

QV qv_zero_v() { return {Rational(0), Rational(0), Rational(0), Rational(0)}; }

QV qv_one_v() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }

QV qv_add(const QV& a, const QV& b) {
  QV r = a;
  for (int i = 0; i < 4; ++i) r[i] += b[i];
  return r;
}

QV qv_sub(const QV& a, const QV& b) {
  QV r = a;
  for (int i = 0; i < 4; ++i) r[i] -= b[i];
  return r;
}

QV qv_scale(const QV& a, const Rational& c) {
  QV r = a;
  for (int i = 0; i < 4; ++i) r[i] *= c;
  return r;
}

QV qv_mul(const QV& a, const QV& b, long q) {
  QV r = qv_zero_v();
  for (int i = 0; i < 4; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b[j] == 0) continue;
      int e = i + j;
      r[e % 4] += a[i] * b[j] * (e >= 4 ? Rational(q) : Rational(1));
    }
  }
  return r;
}

QV qv_inv(const QV& a, long q) {
  // solve (mult-by-a) x = 1 over the basis 1, u, u^2, u^3
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(5, Rational(0)));
  for (int j = 0; j < 4; ++j)
    for (int r = 0; r < 4; ++r) {
      int e = r + j;
      m[e % 4][j] += a[r] * (e >= 4 ? Rational(q) : Rational(1));
    }
  m[0][4] = 1;
  int row = 0;
  std::vector<int> piv(4, -1);
  for (int c = 0; c < 4 && row < 4; ++c) {
    int sel = row;
    while (sel < 4 && m[sel][c] == 0) ++sel;
    if (sel == 4) continue;
    std::swap(m[row], m[sel]);
    Rational d = m[row][c];
    for (int k = 0; k <= 4; ++k) m[row][k] /= d;
    for (int rr = 0; rr < 4; ++rr) {
      if (rr == row || m[rr][c] == 0) continue;
      Rational f = m[rr][c];
      for (int k = 0; k <= 4; ++k) m[rr][k] -= f * m[row][k];
    }
    piv[c] = row++;
  }
  QV x = qv_zero_v();
  for (int c = 0; c < 4; ++c)
    if (piv[c] >= 0) x[c] = m[piv[c]][4];
  for (int rr = row; rr < 4; ++rr)
    if (m[rr][4] != 0) throw std::runtime_error("non-invertible scalar");
  // verify (degenerate pivots can silently drop the constraint)
  QV chk = qv_mul(a, x, q);
  if (!(chk == qv_one_v())) throw std::runtime_error("non-invertible scalar");
  return x;
}

bool qv_is0(const QV& a) {
  return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0;
}

// dense solve over Q(q^{1/4}): rows x (ncols+1) augmented system; basis
// columns are the first nb and must all be pivotal
std::vector<QV> qv_solve(std::vector<std::vector<QV>> m, int ncols, int nb, long q) {
  int nr = static_cast<int>(m.size());
  std::vector<int> pivrow(ncols, -1);
  int row = 0;
  for (int c = 0; c < ncols && row < nr; ++c) {
    int sel = row;
    while (sel < nr && qv_is0(m[sel][c])) ++sel;
    if (sel == nr) continue;
    std::swap(m[row], m[sel]);
    QV inv = qv_inv(m[row][c], q);
    for (int k = c; k <= ncols; ++k) m[row][k] = qv_mul(m[row][k], inv, q);
    for (int rr = 0; rr < nr; ++rr) {
      if (rr == row || qv_is0(m[rr][c])) continue;
      QV f = m[rr][c];
      for (int k = c; k <= ncols; ++k)
        m[rr][k] = qv_sub(m[rr][k], qv_mul(f, m[row][k], q));
    }
    pivrow[c] = row++;
  }
  for (int rr = row; rr < nr; ++rr)
    if (!qv_is0(m[rr][ncols])) throw std::runtime_error("Hall basis reduction failed");
  for (int c = 0; c < nb; ++c)
    if (pivrow[c] < 0) throw std::runtime_error("Hall basis reduction failed");
  std::vector<QV> x(ncols, qv_zero_v());
  for (int c = 0; c < ncols; ++c)
    if (pivrow[c] >= 0) x[c] = m[pivrow[c]][ncols];
  return x;
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// the bound algebra

bool IQuiverAlgebra::is_module(const FqRep& m, long p) const {
  for (auto& rel : relations) {
    int s0 = qbar.arrows[rel[0].first].first;
    int t1 = qbar.arrows[rel[0].second].second;
    FpMat acc(m.dims[t1], m.dims[s0]);
    for (auto& tm : rel) {
      FpMat prod = fp_mul(m.mats[tm.second], m.mats[tm.first], p);
      long cf = ((tm.coeff % p) + p) % p;
      for (int r = 0; r < acc.rows; ++r)
        for (int c = 0; c < acc.cols; ++c)
          acc.a[r][c] = static_cast<int>((acc.a[r][c] + cf * prod.a[r][c]) % p);
    }
    for (auto& row : acc.a)
      for (int x : row)
        if (x % p) return false;
  }
  return true;
}

FqRep IQuiverAlgebra::simple(int i) const {
  FqRep r = zero_rep(qbar.n);
  r.dims[i] = 1;
  conform_mats(qbar, r);
  return r;
}

IntVec IQuiverAlgebra::kdim(int i) const {
  IntVec d(qbar.n, 0);
  d[i] += 1;
  d[shape.rho[i]] += 1;
  return d;
}

FqRep IQuiverAlgebra::gen_simple(int i) const {
  FqRep r = zero_rep(qbar.n);
  r.dims = kdim(i);
  conform_mats(qbar, r);
  if (shape.rho[i] == i) {
    r.mats[eps[i]].a[1][0] = 1;  // rank-one square-zero loop
  } else {
    r.mats[eps[i]].a[0][0] = 1;  // epsilon_i acts by the identity
  }
  return r;
}

IQuiverAlgebra::Projective IQuiverAlgebra::projective(int i) const {
  int ns = static_cast<int>(shape.arrows.size());
  // rho image of each shape arrow
  std::vector<int> rhoa(ns, -1);
  for (int a = 0; a < ns; ++a) {
    auto [s, t] = shape.arrows[a];
    for (int b = 0; b < ns; ++b)
      if (shape.arrows[b] == std::make_pair(shape.rho[s], shape.rho[t])) rhoa[a] = b;
  }
  auto paths_from = [&](int v) {
    std::vector<std::pair<std::vector<int>, int>> out;  // (arrow word, end vertex)
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& w, int at) {
      out.push_back({w, at});
      for (int a = 0; a < ns; ++a)
        if (shape.arrows[a].first == at) {
          w.push_back(a);
          rec(w, shape.arrows[a].second);
          w.pop_back();
        }
    };
    std::vector<int> w;
    rec(w, v);
    return out;
  };
  auto p0 = paths_from(i), p1 = paths_from(shape.rho[i]);
  struct Elt { std::vector<int> path; int delta; int vertex; };
  std::vector<Elt> basis;
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (auto& [w, at] : p0) { index[{0, w}] = static_cast<int>(basis.size()); basis.push_back({w, 0, at}); }
  for (auto& [w, at] : p1) { index[{1, w}] = static_cast<int>(basis.size()); basis.push_back({w, 1, at}); }
  Projective pr;
  pr.rep.dims.assign(qbar.n, 0);
  for (auto& b : basis) pr.rep.dims[b.vertex]++;
  // local coordinate of each basis element within its vertex
  std::vector<int> coord(basis.size());
  {
    IntVec seen(qbar.n, 0);
    for (size_t k = 0; k < basis.size(); ++k) coord[k] = seen[basis[k].vertex]++;
  }
  conform_mats(qbar, pr.rep);
  for (size_t a = 0; a < qbar.arrows.size(); ++a) {
    auto [s, t] = qbar.arrows[a];
    for (size_t k = 0; k < basis.size(); ++k) {
      if (basis[k].vertex != s) continue;
      int target = -1;
      if (a < static_cast<size_t>(ns)) {
        auto w = basis[k].path;
        w.push_back(static_cast<int>(a));
        auto it = index.find({basis[k].delta, w});
        if (it != index.end()) target = it->second;
      } else if (static_cast<int>(a) == eps[s] && basis[k].delta == 0) {
        std::vector<int> w;
        for (int b : basis[k].path) w.push_back(rhoa[b]);
        auto it = index.find({1, w});
        if (it != index.end()) target = it->second;
      }
      if (target >= 0) pr.rep.mats[a].a[coord[target]][coord[k]] = 1;
    }
  }
  for (size_t k = 0; k < basis.size(); ++k) {
    std::vector<int> word;
    if (basis[k].delta == 1) word.push_back(eps[i]);
    for (int b : basis[k].path) word.push_back(b);
    pr.paths.push_back(word);
  }
  return pr;
}

IQuiverAlgebra build_iquiver_algebra(const Quiver& shape) {
  int n = shape.n;
  if (static_cast<int>(shape.rho.size()) != n) throw std::runtime_error("involution invalid");
  for (int i = 0; i < n; ++i) {
    if (shape.rho[i] < 0 || shape.rho[i] >= n || shape.rho[shape.rho[i]] != i)
      throw std::runtime_error("involution invalid");
  }
  for (auto& [s, t] : shape.arrows)
    if (shape.rho[s] == t && s != t) throw std::runtime_error("adjacent swapped vertices");
  if (!shape.rho_preserves_arrows()) throw std::runtime_error("involution invalid");
  IQuiverAlgebra lam;
  lam.shape = shape;
  lam.qbar = shape;
  lam.qbar.label += "-bar";
  lam.eps.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    lam.eps[i] = static_cast<int>(lam.qbar.arrows.size());
    lam.qbar.arrows.push_back({i, shape.rho[i]});
  }
  int ns = static_cast<int>(shape.arrows.size());
  std::vector<int> rhoa(ns, -1);
  for (int a = 0; a < ns; ++a) {
    auto [s, t] = shape.arrows[a];
    for (int b = 0; b < ns; ++b)
      if (shape.arrows[b] == std::make_pair(shape.rho[s], shape.rho[t])) rhoa[a] = b;
    if (rhoa[a] < 0) throw std::runtime_error("involution invalid");
  }
  for (int i = 0; i < n; ++i)
    lam.relations.push_back({{lam.eps[i], lam.eps[shape.rho[i]], 1}});
  for (int a = 0; a < ns; ++a) {
    auto [s, t] = shape.arrows[a];
    lam.relations.push_back({{a, lam.eps[t], 1}, {lam.eps[s], rhoa[a], -1}});
  }
  return lam;
}

// ---------------------------------------------------------------------------
// elements

IHallElt& IHallElt::operator+=(const IHallElt& o) {
  for (auto& [k, x] : o.c) c[k] += x;
  trim();
  return *this;
}

IHallElt& IHallElt::operator-=(const IHallElt& o) {
  for (auto& [k, x] : o.c) c[k] -= x;
  trim();
  return *this;
}

IHallElt IHallElt::operator*(const Laurent& s) const {
  IHallElt r;
  for (auto& [k, x] : c) {
    Laurent y = x * s;
    if (!y.is_zero()) r.c[k] = y;
  }
  return r;
}

void IHallElt::trim() {
  for (auto it = c.begin(); it != c.end();)
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
}

// ---------------------------------------------------------------------------
// per-prime context

struct IHallAlgebra::Ctx {
  long p = 0;
  bool a1fast = false;
  IndecTable qtab;
  std::vector<FqRep> reps;
  std::vector<IntVec> repdims;
  std::map<std::vector<int>, int> sigmap;              // cheap signature -> class
  std::map<std::pair<IntVec, int>, int> a1class;       // (dims, eps rank) -> class
  std::map<IntVec, std::vector<int>> bydim;
  std::set<IntVec> bydim_done;
  std::map<std::pair<int, int>, std::map<int, QV>> raw;
  std::map<IBasisKey, std::map<int, QV>> bval;
  struct Red {
    std::vector<IBasisKey> basis;
    std::vector<int> cls;
    std::map<int, int> row;
    std::vector<std::vector<QV>> cols;  // basis columns then relation columns
    int nb = 0;
  };
  std::map<IntVec, Red> red;
  std::map<KSClass, int> emb;
  std::vector<int> kid;
  std::map<int, int> sig;  // class -> class of its stripped syzygy
};

IHallAlgebra::IHallAlgebra(Quiver shape, long dim_cap, bool rank2)
    : shape_(std::move(shape)),
      lam_(build_iquiver_algebra(shape_)),
      cap_(dim_cap),
      rank2_(rank2),
      cartan_(cartan_matrix(shape_)),
      hall_(shape_),
      primes_({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53}) {}

IHallAlgebra::~IHallAlgebra() = default;

IHallAlgebra::Ctx& IHallAlgebra::ctx(long p) {
  auto it = ctx_.find(p);
  if (it != ctx_.end()) return *it->second;
  auto c = std::make_unique<Ctx>();
  c->p = p;
  c->a1fast = shape_.n == 1 && shape_.rho_is_identity();
  c->qtab = build_indecomposables(shape_, p);
  auto& ref = *c;
  ctx_[p] = std::move(c);
  ref.kid.resize(shape_.n);
  for (int i = 0; i < shape_.n; ++i) ref.kid[i] = classify(ref, lam_.gen_simple(i));
  return ref;
}

int IHallAlgebra::classify(Ctx& c, const FqRep& min) {
  const FqRep* pm = &min;
  FqRep tmp;
  if (min.mats.size() != lam_.qbar.arrows.size()) {
    tmp = min;
    conform_mats(lam_.qbar, tmp);
    pm = &tmp;
  }
  const FqRep& m = *pm;
  auto add = [&](const FqRep& r) {
    if (!lam_.is_module(r, c.p)) throw std::runtime_error("not a module of this algebra");
    c.reps.push_back(r);
    c.repdims.push_back(r.dims);
    return static_cast<int>(c.reps.size()) - 1;
  };
  if (c.a1fast) {
    std::pair<IntVec, int> key{m.dims, fp_rank(m.mats[lam_.eps[0]], c.p)};
    auto it = c.a1class.find(key);
    if (it != c.a1class.end()) return it->second;
    int id = add(m);
    c.a1class[key] = id;
    return id;
  }
  std::vector<int> sig;
  for (int d : m.dims) sig.push_back(d);
  for (auto& mat : m.mats) sig.push_back(fp_rank(mat, c.p));
  for (size_t a = 0; a < lam_.qbar.arrows.size(); ++a)
    for (size_t b = 0; b < lam_.qbar.arrows.size(); ++b)
      if (lam_.qbar.arrows[a].second == lam_.qbar.arrows[b].first)
        sig.push_back(fp_rank(fp_mul(m.mats[b], m.mats[a], c.p), c.p));
  auto it = c.sigmap.find(sig);
  if (it != c.sigmap.end()) {
    if (c.repdims[it->second] != m.dims) throw std::runtime_error("iso certification failed");
    return it->second;
  }
  for (size_t j = 0; j < c.reps.size(); ++j)
    if (c.repdims[j] == m.dims && certified_iso(lam_.qbar, c.p, m, c.reps[j])) {
      c.sigmap[sig] = static_cast<int>(j);
      return static_cast<int>(j);
    }
  int id = add(m);
  c.sigmap[sig] = id;
  return id;
}

void IHallAlgebra::ensure_dim(Ctx& c, const IntVec& d) {
  if (c.bydim_done.count(d)) return;
  std::set<int> out;
  bool zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
  if (zero) {
    out.insert(classify(c, zero_rep(shape_.n)));
  } else if (c.a1fast) {
    for (int r = 0; 2 * r <= d[0]; ++r) {
      FqRep m = zero_rep(1);
      m.dims[0] = d[0];
      conform_mats(lam_.qbar, m);
      for (int k = 0; k < r; ++k) m.mats[lam_.eps[0]].a[d[0] - 2 * r + 2 * k + 1][d[0] - 2 * r + 2 * k] = 1;
      out.insert(classify(c, m));
    }
  } else {
    for (int i = 0; i < shape_.n; ++i) {
      if (d[i] == 0) continue;
      IntVec d2 = d;
      d2[i] -= 1;
      ensure_dim(c, d2);
      int si = classify(c, lam_.simple(i));
      for (int id2 : c.bydim[d2])
        for (auto& [mid, val] : praw(c, si, id2)) out.insert(mid);
    }
  }
  c.bydim[d] = std::vector<int>(out.begin(), out.end());
  c.bydim_done.insert(d);
}

const std::map<int, QV>& IHallAlgebra::praw(Ctx& c, int mi, int ni) {
  auto key = std::make_pair(mi, ni);
  auto it = c.raw.find(key);
  if (it != c.raw.end()) return it->second;
  // copies: classify below can grow c.reps and move the storage
  const FqRep m = c.reps[mi];
  const FqRep n = c.reps[ni];
  long e = euler_form(shape_, m.dims, n.dims);
  long h = (rep_is_zero(m) || rep_is_zero(n)) ? 0 : hom_dim(lam_.qbar, c.p, m, n);
  QV factor = qv_of(Laurent::u(static_cast<int>(2 * e - 4 * h)), c.p);
  std::map<int, Rational> counts;
  bool done = false;
  if (c.a1fast) {
    auto decomp = [&](int id) {
      int d = c.repdims[id].empty() ? 0 : c.repdims[id][0];
      int r = fp_rank(c.reps[id].mats[lam_.eps[0]], c.p);
      return std::make_pair(d - 2 * r, r);  // (simple mult, regular mult)
    };
    auto a1id = [&](int a, int b) {
      FqRep x = zero_rep(1);
      x.dims[0] = a + 2 * b;
      conform_mats(lam_.qbar, x);
      for (int k = 0; k < b; ++k) x.mats[lam_.eps[0]].a[a + 2 * k + 1][a + 2 * k] = 1;
      return classify(c, x);
    };
    auto [a1, b1] = decomp(mi);
    auto [a2, b2] = decomp(ni);
    if ((a1 == 0 && b1 == 1) || (a2 == 0 && b2 == 1)) {
      counts[a1id(a1 + a2, b1 + b2)] = 1;  // Ext vanishes against the regular module
      done = true;
    } else if (a1 == 1 && b1 == 0) {       // simple on the left
      if (a2 == 0) counts[a1id(1, b2)] = 1;
      else {
        counts[a1id(a2 + 1, b2)] = 1;
        counts[a1id(a2 - 1, b2 + 1)] = qpow(c.p, a2) - 1;
      }
      done = true;
    } else if (a2 == 1 && b2 == 0) {       // simple on the right
      if (a1 == 0) counts[a1id(1, b1)] = 1;
      else {
        counts[a1id(a1 + 1, b1)] = 1;
        counts[a1id(a1 - 1, b1 + 1)] = qpow(c.p, a1) - 1;
      }
      done = true;
    }
  }
  if (!done) {
    if (rep_is_zero(m)) { counts[ni] = 1; }
    else if (rep_is_zero(n)) { counts[mi] = 1; }
    else {
      ExtFrame fr = ext_frame(lam_, c.p, m, n);
      int k = static_cast<int>(fr.comp.size());
      double total = 1;
      for (int j = 0; j < k; ++j) {
        total *= static_cast<double>(c.p);
        if (total > 3e6) throw std::runtime_error("census cap exceeded");
      }
      std::vector<long> odo(k, 0);
      std::vector<int> z(fr.nvars, 0);
      while (true) {
        std::fill(z.begin(), z.end(), 0);
        for (int j = 0; j < k; ++j) {
          if (!odo[j]) continue;
          for (int t = 0; t < fr.nvars; ++t)
            z[t] = static_cast<int>((z[t] + odo[j] * fr.comp[j][t]) % c.p);
        }
        counts[classify(c, ext_middle(lam_, m, n, fr, z))] += 1;
        int j = 0;
        while (j < k && ++odo[j] == c.p) odo[j++] = 0;
        if (j == k) break;
      }
    }
  }
  std::map<int, QV> out;
  for (auto& [id, cnt] : counts) out[id] = qv_scale(factor, cnt);
  return c.raw[key] = std::move(out);
}

const std::map<int, QV>& IHallAlgebra::bval_ids(Ctx& c, const IBasisKey& k) {
  auto it = c.bval.find(k);
  if (it != c.bval.end()) return it->second;
  int id0;
  if (k.second.empty()) {
    id0 = classify(c, zero_rep(shape_.n));
  } else {
    auto em = c.emb.find(k.second);
    if (em != c.emb.end()) id0 = em->second;
    else {
      FqRep r = c.qtab.rep_of(k.second);
      FqRep full = zero_rep(shape_.n);
      full.dims = r.dims;
      conform_mats(lam_.qbar, full);
      for (size_t a = 0; a < shape_.arrows.size(); ++a) full.mats[a] = r.mats[a];
      id0 = classify(c, full);
      c.emb[k.second] = id0;
    }
  }
  std::map<int, QV> val{{id0, qv_one_v()}};
  for (int i = 0; i < shape_.n; ++i)
    for (int t = 0; t < k.first[i]; ++t) {
      std::map<int, QV> nx;
      for (auto& [id, cf] : val)
        for (auto& [mid, w] : praw(c, id, c.kid[i])) {
          QV add = qv_mul(cf, w, c.p);
          auto [jt, fresh] = nx.try_emplace(mid, add);
          if (!fresh) jt->second = qv_add(jt->second, add);
        }
      val = std::move(nx);
    }
  return c.bval[k] = std::move(val);
}

std::map<IBasisKey, QV> IHallAlgebra::reduce_ids(Ctx& c, const IntVec& d,
                                                 const std::map<int, QV>& t) {
  ensure_dim(c, d);
  auto rit = c.red.find(d);
  if (rit == c.red.end()) {
    Ctx::Red red;
    red.cls = c.bydim[d];
    for (size_t i = 0; i < red.cls.size(); ++i) red.row[red.cls[i]] = static_cast<int>(i);
    red.basis = basis_of_degree(d);
    red.nb = static_cast<int>(red.basis.size());
    int nr = static_cast<int>(red.cls.size());
    for (auto& bk : red.basis) {
      std::vector<QV> col(nr, qv_zero_v());
      for (auto& [id, cf] : bval_ids(c, bk)) {
        auto r = red.row.find(id);
        if (r == red.row.end()) throw std::runtime_error("Hall basis reduction failed");
        col[r->second] = cf;
      }
      red.cols.push_back(std::move(col));
    }
    // relation span: same restriction to the epsilon subalgebra and same
    // singularity-category class
    std::map<std::pair<std::vector<int>, int>, int> rep;
    for (int id : red.cls) {
      std::pair<std::vector<int>, int> dk{resh_key(c, id), sigma_id(c, id)};
      auto [jt, fresh] = rep.try_emplace(dk, id);
      if (!fresh) {
        std::vector<QV> col(nr, qv_zero_v());
        col[red.row[jt->second]] = qv_one_v();
        col[red.row[id]] = qv_scale(qv_one_v(), Rational(-1));
        red.cols.push_back(std::move(col));
      }
    }
    rit = c.red.emplace(d, std::move(red)).first;
  }
  Ctx::Red& red = rit->second;
  int nr = static_cast<int>(red.cls.size());
  int ncols = static_cast<int>(red.cols.size());
  std::vector<std::vector<QV>> m(nr, std::vector<QV>(ncols + 1, qv_zero_v()));
  for (int j = 0; j < ncols; ++j)
    for (int i = 0; i < nr; ++i) m[i][j] = red.cols[j][i];
  for (auto& [id, cf] : t) {
    auto r = red.row.find(id);
    if (r == red.row.end()) throw std::runtime_error("Hall basis reduction failed");
    m[r->second][ncols] = cf;
  }
  std::vector<QV> x = qv_solve(std::move(m), ncols, red.nb, c.p);
  std::map<IBasisKey, QV> out;
  for (int j = 0; j < red.nb; ++j)
    if (!qv_is0(x[j])) out[red.basis[j]] = x[j];
  return out;
}

std::vector<int> IHallAlgebra::resh_key(Ctx& c, int id) {
  std::vector<int> key;
  const FqRep& m = c.reps[id];
  for (int i : rho_orbit_reps(shape_)) {
    key.push_back(m.dims[i]);
    key.push_back(fp_rank(m.mats[lam_.eps[i]], c.p));
    if (shape_.rho[i] != i) {
      key.push_back(m.dims[shape_.rho[i]]);
      key.push_back(fp_rank(m.mats[lam_.eps[shape_.rho[i]]], c.p));
    }
  }
  return key;
}

int IHallAlgebra::sigma_id(Ctx& c, int id) {
  auto it = c.sig.find(id);
  if (it != c.sig.end()) return it->second;
  const Quiver& q = lam_.qbar;
  long p = c.p;
  FqRep m = c.reps[id];
  // projective cover columns from a basis of the top
  FqRep cover = zero_rep(q.n);
  std::vector<std::pair<int, std::vector<int>>> summ;  // (vertex, lift vector)
  for (int i = 0; i < q.n; ++i) {
    int rad = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].second == i) rad += m.dims[q.arrows[a].first];
    FpMat radm(m.dims[i], rad);
    int col = 0;
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].second == i)
        for (int cc = 0; cc < m.dims[q.arrows[a].first]; ++cc, ++col)
          for (int r = 0; r < m.dims[i]; ++r) radm.a[r][col] = m.mats[a].a[r][cc];
    for (auto& v : fp_coker_basis(radm, p)) summ.push_back({i, v});
  }
  std::vector<IQuiverAlgebra::Projective> pcs;
  for (auto& [i, v] : summ) pcs.push_back(lam_.projective(i));
  FqRep bigp = zero_rep(q.n);
  for (auto& pc : pcs)
    for (int i = 0; i < q.n; ++i) bigp.dims[i] += pc.rep.dims[i];
  conform_mats(q, bigp);
  {
    IntVec off(q.n, 0);
    for (size_t s = 0; s < pcs.size(); ++s) {
      IntVec local(q.n, 0);
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        auto [ss, tt] = q.arrows[a];
        auto& src = pcs[s].rep.mats[a];
        for (int r = 0; r < src.rows; ++r)
          for (int cc = 0; cc < src.cols; ++cc)
            bigp.mats[a].a[off[tt] + r][off[ss] + cc] = src.a[r][cc];
      }
      for (int i = 0; i < q.n; ++i) off[i] += pcs[s].rep.dims[i];
    }
  }
  // cover map phi: evaluate each path word on the lift vector
  std::vector<FpMat> phi(q.n);
  for (int i = 0; i < q.n; ++i) phi[i] = FpMat(m.dims[i], bigp.dims[i]);
  {
    IntVec off(q.n, 0);
    IntVec used(q.n, 0);
    for (size_t s = 0; s < pcs.size(); ++s) {
      auto& [vtx, lift] = summ[s];
      // local coordinates per vertex inside this projective
      IntVec seen(q.n, 0);
      std::vector<int> coord(pcs[s].paths.size());
      std::vector<int> endv(pcs[s].paths.size());
      for (size_t k = 0; k < pcs[s].paths.size(); ++k) {
        int at = vtx;
        for (int a : pcs[s].paths[k]) at = q.arrows[a].second;
        endv[k] = at;
        coord[k] = seen[at]++;
      }
      for (size_t k = 0; k < pcs[s].paths.size(); ++k) {
        std::vector<long> vec(lift.begin(), lift.end());
        int at = vtx;
        for (int a : pcs[s].paths[k]) {
          std::vector<long> nx(m.dims[q.arrows[a].second], 0);
          for (int r = 0; r < m.dims[q.arrows[a].second]; ++r)
            for (int cc = 0; cc < m.dims[at]; ++cc)
              nx[r] = (nx[r] + static_cast<long>(m.mats[a].a[r][cc]) * vec[cc]) % p;
          vec = std::move(nx);
          at = q.arrows[a].second;
        }
        for (int r = 0; r < m.dims[at]; ++r)
          phi[at].a[r][off[at] + coord[k]] = static_cast<int>(vec[r]);
      }
      for (int i = 0; i < q.n; ++i) off[i] += pcs[s].rep.dims[i];
      (void)used;
    }
  }
  // kernel of the cover, with the restricted arrow action
  auto subrep = [&](const FqRep& amb, const std::vector<FpMat>& maps) {
    std::vector<FpMat> bases(q.n);
    FqRep k = zero_rep(q.n);
    for (int i = 0; i < q.n; ++i) {
      bases[i] = fp_kernel(maps[i], p);
      k.dims[i] = bases[i].cols;
    }
    conform_mats(q, k);
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, t] = q.arrows[a];
      k.mats[a] = fp_solve(bases[t], fp_mul(amb.mats[a], bases[s], p), p);
    }
    return k;
  };
  FqRep omega = subrep(bigp, phi);
  // strip projective summands
  bool changed = true;
  while (changed && !rep_is_zero(omega)) {
    changed = false;
    for (int i = 0; i < q.n && !changed; ++i) {
      auto pc = lam_.projective(i);
      if (pc.rep.dims > omega.dims) {
        bool fits = true;
        for (int v = 0; v < q.n; ++v)
          if (pc.rep.dims[v] > omega.dims[v]) fits = false;
        if (!fits) continue;
      }
      auto fb = hom_space(q, p, pc.rep, omega);
      auto gb = hom_space(q, p, omega, pc.rep);
      if (fb.empty() || gb.empty()) continue;
      auto try_pair = [&](const std::vector<FpMat>& f, const std::vector<FpMat>& g) {
        std::vector<FpMat> gf(q.n);
        for (int v = 0; v < q.n; ++v) gf[v] = fp_mul(g[v], f[v], p);
        if (!vertexwise_invertible(gf, p)) return false;
        std::vector<FpMat> e(q.n);
        for (int v = 0; v < q.n; ++v)
          e[v] = fp_mul(f[v], fp_mul(fp_inverse(gf[v], p), g[v], p), p);
        omega = subrep(omega, e);
        return true;
      };
      for (auto& f : fb) {
        for (auto& g : gb)
          if (try_pair(f, g)) { changed = true; break; }
        if (changed) break;
      }
      if (!changed) {
        std::mt19937 rng(777 + i);
        std::uniform_int_distribution<long> pick(0, p - 1);
        for (int t = 0; t < 200 && !changed; ++t) {
          auto mix = [&](const std::vector<std::vector<FpMat>>& bs) {
            std::vector<FpMat> f(q.n);
            for (int v = 0; v < q.n; ++v) f[v] = FpMat(bs[0][v].rows, bs[0][v].cols);
            for (auto& b : bs) {
              long cf = pick(rng);
              if (!cf) continue;
              for (int v = 0; v < q.n; ++v)
                for (int r = 0; r < f[v].rows; ++r)
                  for (int cc = 0; cc < f[v].cols; ++cc)
                    f[v].a[r][cc] = static_cast<int>((f[v].a[r][cc] + cf * b[v].a[r][cc]) % p);
            }
            return f;
          };
          changed = try_pair(mix(fb), mix(gb));
        }
      }
    }
  }
  int out = classify(c, omega);
  c.sig[id] = out;
  return out;
}

// ---------------------------------------------------------------------------
// counting layer API

std::map<IBasisKey, QV> IHallAlgebra::prime_product(long p, const IBasisKey& x,
                                                    const IBasisKey& y) {
  for (int a : x.first)
    if (a < 0) throw std::runtime_error("negative K exponent at a prime");
  for (int a : y.first)
    if (a < 0) throw std::runtime_error("negative K exponent at a prime");
  Ctx& c = ctx(p);
  std::map<int, QV> t;
  for (auto& [i1, c1] : bval_ids(c, x))
    for (auto& [i2, c2] : bval_ids(c, y)) {
      QV cf = qv_mul(c1, c2, p);
      for (auto& [mid, w] : praw(c, i1, i2)) {
        QV add = qv_mul(cf, w, p);
        auto [jt, fresh] = t.try_emplace(mid, add);
        if (!fresh) jt->second = qv_add(jt->second, add);
      }
    }
  for (auto it = t.begin(); it != t.end();)
    it = qv_is0(it->second) ? t.erase(it) : std::next(it);
  return reduce_ids(c, vec_add(key_degree(x), key_degree(y)), t);
}

int IHallAlgebra::class_count(long p, const IntVec& d) {
  Ctx& c = ctx(p);
  ensure_dim(c, d);
  return static_cast<int>(c.bydim[d].size());
}

bool IHallAlgebra::dsg_isomorphic(long p, const FqRep& m, const FqRep& n) {
  Ctx& c = ctx(p);
  return sigma_id(c, classify(c, m)) == sigma_id(c, classify(c, n));
}

long IHallAlgebra::lambda_ext_dim(long p, const FqRep& m, const FqRep& n) {
  Ctx& c = ctx(p);
  if (rep_is_zero(m) || rep_is_zero(n)) return 0;
  return static_cast<long>(ext_frame(lam_, c.p, m, n).comp.size());
}

long IHallAlgebra::lambda_hom_dim(long p, const FqRep& m, const FqRep& n) {
  if (rep_is_zero(m) || rep_is_zero(n)) return 0;
  return hom_dim(lam_.qbar, p, m, n);
}

QV IHallAlgebra::qv_of(const Laurent& x, long q) {
  QV out = qv_zero_v();
  for (auto& [e, cf] : x.coeffs()) {
    int r = ((e % 4) + 4) % 4;
    out[r] += cf * qpow(q, (e - r) / 4);
  }
  return out;
}

bool IHallAlgebra::qv_zero(const QV& a) { return qv_is0(a); }

// ---------------------------------------------------------------------------
// degrees, coverage, basis enumeration

IntVec IHallAlgebra::key_degree(const IBasisKey& k) const {
  IntVec d(shape_.n, 0);
  for (int i = 0; i < shape_.n; ++i)
    if (k.first[i]) {
      IntVec kd = lam_.kdim(i);
      for (int j = 0; j < shape_.n; ++j) d[j] += k.first[i] * kd[j];
    }
  if (!k.second.empty()) d = vec_add(d, hall_.class_dim(k.second));
  return d;
}

void IHallAlgebra::check_coverage(const IntVec& d) const {
  long total = std::accumulate(d.begin(), d.end(), 0L);
  if (shape_.n == 1 && shape_.rho_is_identity()) return;
  bool diag = true;
  for (int i = 0; i < shape_.n; ++i)
    if (shape_.rho[i] == i) diag = false;
  if (diag) throw std::runtime_error("diagonal type is covered by the double algebra");
  if (shape_.rho_is_identity() && shape_.n == 2 && shape_.arrows.size() == 1) {
    if (!rank2_) throw std::runtime_error("rank 2 coverage is disabled");
    if (total > cap_) throw std::runtime_error("coverage cap exceeded");
    return;
  }
  throw std::runtime_error("shape outside coverage");
}

std::vector<KSClass> IHallAlgebra::classes_with_dim(const IntVec& d) {
  std::vector<KSClass> out;
  const auto& roots = hall_.roots();
  KSClass cur;
  std::function<void(size_t, IntVec)> rec = [&](size_t k, IntVec rem) {
    bool zero = std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; });
    if (zero) { out.push_back(cur); return; }
    if (k == roots.size()) return;
    rec(k + 1, rem);
    IntVec r2 = rem;
    int mult = 0;
    while (true) {
      bool ok = true;
      for (int j = 0; j < shape_.n; ++j) {
        r2[j] -= roots[k][j];
        if (r2[j] < 0) ok = false;
      }
      if (!ok) break;
      ++mult;
      cur[static_cast<int>(k)] = mult;
      rec(k + 1, r2);
    }
    cur.erase(static_cast<int>(k));
  };
  rec(0, d);
  return out;
}

std::vector<IBasisKey> IHallAlgebra::basis_of_degree(const IntVec& d) {
  std::vector<IBasisKey> out;
  IntVec alpha(shape_.n, 0);
  std::function<void(int, IntVec)> rec = [&](int i, IntVec rem) {
    if (i == shape_.n) {
      for (auto& lam : classes_with_dim(rem)) out.push_back({alpha, lam});
      return;
    }
    IntVec kd = lam_.kdim(i);
    IntVec r2 = rem;
    alpha[i] = 0;
    while (true) {
      rec(i + 1, r2);
      bool ok = true;
      for (int j = 0; j < shape_.n; ++j) {
        r2[j] -= kd[j];
        if (r2[j] < 0) ok = false;
      }
      if (!ok) break;
      alpha[i] += 1;
    }
    alpha[i] = 0;
  };
  rec(0, d);
  return out;
}

// ---------------------------------------------------------------------------
// element builders

IHallElt IHallAlgebra::unit() {
  IHallElt r;
  r.c[{IntVec{}, KSClass{}}] = Laurent::one();
  return r;
}

IHallElt IHallAlgebra::basis_elt(const IntVec& alpha, const KSClass& lambda) {
  IHallElt r;
  r.c[{alpha, lambda}] = Laurent::one();
  return r;
}

IHallElt IHallAlgebra::norm(const IHallElt& x) const {
  IHallElt r;
  for (auto& [k, cf] : x.c) {
    IBasisKey nk = k;
    if (nk.first.empty()) nk.first.assign(shape_.n, 0);
    if (static_cast<int>(nk.first.size()) != shape_.n)
      throw std::runtime_error("bad K exponent vector");
    r.c[nk] += cf;
  }
  r.trim();
  return r;
}

IHallElt IHallAlgebra::u_elt(const KSClass& lambda) const {
  IHallElt r;
  r.c[{IntVec(shape_.n, 0), lambda}] = Laurent::one();
  return r;
}

IHallElt IHallAlgebra::kclass(const IntVec& alpha) const {
  IHallElt r;
  r.c[{alpha, KSClass{}}] = Laurent::one();
  return r;
}

IHallElt IHallAlgebra::simple(int i) const { return u_elt(hall_.simple_class(i)); }

IHallElt IHallAlgebra::bgen(int i) const { return simple(i) * Laurent::u(-1); }

IHallElt IHallAlgebra::kgen(int i) const {
  IntVec a(shape_.n, 0);
  a[i] = 1;
  IHallElt r = kclass(a);
  if (shape_.rho[i] == i) r = r * Laurent::v(-1);
  return r;
}

IHallElt IHallAlgebra::kcal(int i) const {
  IHallElt r = kgen(i);
  if (shape_.rho[i] == i) r = r * Laurent::v(1);
  return r;
}

int IHallAlgebra::k_exponent(int i, const IntVec& d) const {
  int e = 0;
  for (int j = 0; j < shape_.n; ++j)
    e += d[j] * (cartan_[shape_.rho[i]][j] - cartan_[i][j]);
  return e;
}

IHallElt IHallAlgebra::shift_k(const IHallElt& x, const IntVec& beta) const {
  IHallElt r;
  for (auto& [k, cf] : x.c) r.c[{vec_add(k.first, beta), k.second}] = cf;
  return r;
}

IHallElt IHallAlgebra::kclass_left(const IntVec& gamma, const IHallElt& x) const {
  IHallElt r;
  for (auto& [k, cf] : x.c) {
    IntVec d = k.second.empty() ? IntVec(shape_.n, 0) : hall_.class_dim(k.second);
    int e = 0;
    for (int i = 0; i < shape_.n; ++i) e += gamma[i] * k_exponent(i, d);
    r.c[{vec_add(k.first, gamma), k.second}] += cf * Laurent::v(e);
  }
  r.trim();
  return r;
}

// ---------------------------------------------------------------------------
// generic structure constants against one simple

const std::map<IBasisKey, Laurent>& IHallAlgebra::gtable_simple(const KSClass& nu, int j) {
  auto key = std::make_pair(nu, j);
  auto it = gs_memo_.find(key);
  if (it != gs_memo_.end()) return it->second;
  IntVec d(shape_.n, 0);
  if (!nu.empty()) d = hall_.class_dim(nu);
  d[j] += 1;
  std::vector<std::map<IBasisKey, QV>> samples;
  std::map<IBasisKey, Laurent> prev;
  bool have_prev = false;
  for (size_t k = 4; k <= primes_.size(); ++k) {
    while (samples.size() < k) {
      long p = primes_[samples.size()];
      Ctx& c = ctx(p);
      IBasisKey xb{IntVec(shape_.n, 0), nu};
      IBasisKey yb{IntVec(shape_.n, 0), hall_.simple_class(j)};
      std::map<int, QV> t;
      for (auto& [i1, c1] : bval_ids(c, xb))
        for (auto& [i2, c2] : bval_ids(c, yb)) {
          QV cf = qv_mul(c1, c2, p);
          for (auto& [mid, w] : praw(c, i1, i2)) {
            QV add = qv_mul(cf, w, p);
            auto [jt, fresh] = t.try_emplace(mid, add);
            if (!fresh) jt->second = qv_add(jt->second, add);
          }
        }
      samples.push_back(reduce_ids(c, d, t));
    }
    std::set<IBasisKey> keys;
    for (size_t s = 0; s < k; ++s)
      for (auto& [bk, val] : samples[s]) keys.insert(bk);
    std::map<IBasisKey, Laurent> result;
    bool bad = false;
    for (auto& bk : keys) {
      Laurent acc;
      for (int r = 0; r < 4 && !bad; ++r) {
        std::vector<Rational> vals(k, Rational(0));
        long shift = 0;
        for (size_t s = 0; s < k; ++s) {
          auto vit = samples[s].find(bk);
          Rational v = vit == samples[s].end() ? Rational(0) : vit->second[r];
          vals[s] = v;
          BigInt den = denominator(v);
          long dcount = 0;
          while (den % primes_[s] == 0) { den /= primes_[s]; ++dcount; }
          if (den != 1) { bad = true; break; }
          shift = std::max(shift, dcount);
        }
        if (bad) break;
        std::vector<std::pair<long, Rational>> pts;
        for (size_t s = 0; s < k; ++s)
          pts.push_back({primes_[s], vals[s] * qpow(primes_[s], shift)});
        QPolynomial poly = interpolate_q(pts, static_cast<int>(k) - 1);
        for (size_t mdeg = 0; mdeg < poly.coeffs().size(); ++mdeg)
          acc += Laurent::term(poly.coeffs()[mdeg],
                               static_cast<int>(4 * (static_cast<long>(mdeg) - shift)) + r);
      }
      if (bad) break;
      if (!acc.is_zero()) result[bk] = acc;
    }
    if (!bad && have_prev && result == prev) return gs_memo_[key] = std::move(result);
    if (!bad) { prev = std::move(result); have_prev = true; }
    else have_prev = false;
  }
  throw std::runtime_error("interpolation instability");
}

IHallElt IHallAlgebra::mul_simple(const IHallElt& x, int j) {
  IntVec ej(shape_.n, 0);
  ej[j] = 1;
  IHallElt out;
  for (auto& [k, cf] : x.c) {
    int tw = 0;
    for (int i = 0; i < shape_.n; ++i) tw += k.first[i] * k_exponent(i, ej);
    Laurent c2 = cf * Laurent::v(tw);
    for (auto& [gk, g] : gtable_simple(k.second, j))
      out.c[{vec_add(k.first, gk.first), gk.second}] += c2 * g;
  }
  out.trim();
  return out;
}

IHallElt IHallAlgebra::word_value(const std::vector<int>& w) {
  if (w.empty()) {
    IHallElt r;
    r.c[{IntVec(shape_.n, 0), KSClass{}}] = Laurent::one();
    return r;
  }
  auto it = word_memo_.find(w);
  if (it != word_memo_.end()) return it->second;
  std::vector<int> pre(w.begin(), w.end() - 1);
  IHallElt r = mul_simple(word_value(pre), w.back());
  return word_memo_[w] = r;
}

// ---------------------------------------------------------------------------
// monomial span of a degree block

const std::map<IBasisKey, IHallAlgebra::SpanExpr>& IHallAlgebra::span(const IntVec& d) {
  auto it = span_memo_.find(d);
  if (it != span_memo_.end()) return it->second;
  std::vector<IBasisKey> keys = basis_of_degree(d);
  struct Row {
    std::map<IBasisKey, Frac> vec;
    std::map<std::pair<IntVec, Word>, Frac> expr;
    IBasisKey pivot;
  };
  std::vector<Row> rows;
  auto insert_row = [&](Row r) {
    for (auto& pr : rows) {
      auto f = r.vec.find(pr.pivot);
      if (f == r.vec.end()) continue;
      Frac cf = f->second;
      for (auto& [bk, v] : pr.vec) r.vec[bk] -= cf * v;
      for (auto& [mk, v] : pr.expr) r.expr[mk] -= cf * v;
    }
    for (auto jt = r.vec.begin(); jt != r.vec.end();)
      jt = jt->second.is_zero() ? r.vec.erase(jt) : std::next(jt);
    if (r.vec.empty()) return;
    r.pivot = r.vec.begin()->first;
    Frac inv = Frac(Laurent::one()) / r.vec.begin()->second;
    for (auto& [bk, v] : r.vec) v *= inv;
    for (auto& [mk, v] : r.expr) v *= inv;
    for (auto& pr : rows) {
      auto f = pr.vec.find(r.pivot);
      if (f == pr.vec.end()) continue;
      Frac cf = f->second;
      for (auto& [bk, v] : r.vec) pr.vec[bk] -= cf * v;
      for (auto& [mk, v] : r.expr) pr.expr[mk] -= cf * v;
      for (auto jt = pr.vec.begin(); jt != pr.vec.end();)
        jt = jt->second.is_zero() ? pr.vec.erase(jt) : std::next(jt);
      for (auto jt = pr.expr.begin(); jt != pr.expr.end();)
        jt = jt->second.is_zero() ? pr.expr.erase(jt) : std::next(jt);
    }
    rows.push_back(std::move(r));
  };
  // monomials K_gamma * u_{w_1} * ... * u_{w_k}
  IntVec gamma(shape_.n, 0);
  std::function<void(int, IntVec)> rec = [&](int i, IntVec rem) {
    if (rows.size() == keys.size()) return;
    if (i == shape_.n) {
      std::vector<int> content;
      for (int j = 0; j < shape_.n; ++j)
        for (int t = 0; t < rem[j]; ++t) content.push_back(j);
      std::sort(content.begin(), content.end());
      do {
        if (rows.size() == keys.size()) return;
        IHallElt val = kclass_left(gamma, word_value(content));
        Row r;
        for (auto& [bk, cf] : val.c) r.vec[bk] = Frac(cf);
        r.expr[{gamma, content}] = Frac(Laurent::one());
        insert_row(std::move(r));
      } while (std::next_permutation(content.begin(), content.end()));
      return;
    }
    IntVec kd = lam_.kdim(i);
    IntVec r2 = rem;
    gamma[i] = 0;
    while (true) {
      rec(i + 1, r2);
      bool ok = true;
      for (int j = 0; j < shape_.n; ++j) {
        r2[j] -= kd[j];
        if (r2[j] < 0) ok = false;
      }
      if (!ok) break;
      gamma[i] += 1;
    }
    gamma[i] = 0;
  };
  rec(0, d);
  std::map<IBasisKey, SpanExpr> out;
  for (auto& r : rows) {
    if (r.vec.size() != 1) throw std::runtime_error("basis expression span incomplete");
    SpanExpr se;
    for (auto& [mk, cf] : r.expr) se.terms.push_back({mk.first, mk.second, cf});
    out[r.pivot] = std::move(se);
  }
  for (auto& bk : keys)
    if (!out.count(bk)) throw std::runtime_error("basis expression span incomplete");
  return span_memo_[d] = std::move(out);
}

// ---------------------------------------------------------------------------
// product, bar, diamond

IHallElt IHallAlgebra::product(const IHallElt& xin, const IHallElt& yin) {
  IHallElt x = norm(xin), y = norm(yin);
  IntVec dmax(shape_.n, 0);
  auto bump = [&](const IHallElt& e) {
    IntVec m(shape_.n, 0);
    for (auto& [k, cf] : e.c) {
      IntVec d = key_degree(k);
      for (int i = 0; i < shape_.n; ++i) m[i] = std::max(m[i], d[i]);
    }
    return m;
  };
  if (!x.c.empty() && !y.c.empty()) check_coverage(vec_add(bump(x), bump(y)));
  std::map<IBasisKey, Frac> acc;
  for (auto& [yk, yc] : y.c) {
    const auto& [beta, mu] = yk;
    std::vector<std::pair<IHallElt, Frac>> parts;
    if (mu.empty()) {
      parts.push_back({x, Frac(yc)});
    } else {
      IntVec dmu = hall_.class_dim(mu);
      const auto& se = span(dmu).at({IntVec(shape_.n, 0), mu});
      for (auto& [gamma, w, cf] : se.terms) {
        IHallElt t = shift_k(x, gamma);
        for (int letter : w) t = mul_simple(t, letter);
        parts.push_back({std::move(t), cf * Frac(yc)});
      }
    }
    for (auto& [elt, cf] : parts)
      for (auto& [k, v] : elt.c)
        acc[{vec_add(k.first, beta), k.second}] += cf * Frac(v);
  }
  IHallElt out;
  for (auto& [k, cf] : acc) {
    Laurent v = cf.to_laurent_or_throw("non-Laurent product");
    if (!v.is_zero()) out.c[k] = v;
  }
  return out;
}

IHallElt IHallAlgebra::power(const IHallElt& x, int n) {
  IHallElt r = unit();
  for (int i = 0; i < n; ++i) r = product(r, x);
  return norm(r);
}

const std::map<IBasisKey, Laurent>& IHallAlgebra::gtable(const KSClass& lambda,
                                                         const KSClass& mu) {
  auto key = std::make_pair(lambda, mu);
  auto it = g_memo_.find(key);
  if (it != g_memo_.end()) return it->second;
  IHallElt r = product(u_elt(lambda), u_elt(mu));
  return g_memo_[key] = std::move(r.c);
}

IHallElt IHallAlgebra::bar_key(const IBasisKey& k) {
  auto it = bar_memo_.find(k);
  if (it != bar_memo_.end()) return it->second;
  const auto& [alpha, mu] = k;
  IHallElt out;
  if (mu.empty()) {
    out.c[k] = Laurent::one();
    return bar_memo_[k] = out;
  }
  IntVec dmu = hall_.class_dim(mu);
  const auto& se = span(dmu).at({IntVec(shape_.n, 0), mu});
  std::map<IBasisKey, Frac> acc;
  for (auto& [gamma, w, cf] : se.terms) {
    // bar(K_gamma * u_{w_1} ... u_{w_k}) = v^{-k} u_{w_k} ... u_{w_1} * K_gamma
    std::vector<int> rw(w.rbegin(), w.rend());
    IHallElt t = shift_k(word_value(rw), gamma);
    Frac c2 = cf.bar() * Frac(Laurent::v(-static_cast<int>(w.size())));
    for (auto& [bk, v] : t.c) acc[bk] += c2 * Frac(v);
  }
  IHallElt bu;
  for (auto& [bk, cf] : acc) {
    Laurent v = cf.to_laurent_or_throw("non-Laurent bar image");
    if (!v.is_zero()) bu.c[bk] = v;
  }
  out = kclass_left(alpha, bu);
  return bar_memo_[k] = out;
}

IHallElt IHallAlgebra::bar(const IHallElt& xin) {
  IHallElt x = norm(xin);
  IHallElt out;
  for (auto& [k, cf] : x.c) out += bar_key(k) * cf.bar();
  out.trim();
  return out;
}

IHallElt IHallAlgebra::diamond(const IntVec& alpha, const IHallElt& xin) {
  IHallElt x = norm(xin);
  IntVec am(shape_.n, 0);
  for (int i = 0; i < shape_.n; ++i) am[i] = alpha[i];
  IntVec tw(shape_.n, 0);
  for (int i = 0; i < shape_.n; ++i) tw[shape_.rho[i]] -= alpha[i];
  IntVec diff = vec_add(am, tw);  // alpha - rho(alpha)
  IHallElt shifted = kclass_left(alpha, x);
  // apply the extra half symmetrized-form twist per key
  IHallElt out;
  for (auto& [k, cf] : x.c) {
    IntVec d = k.second.empty() ? IntVec(shape_.n, 0) : hall_.class_dim(k.second);
    int e = 0;
    for (int i = 0; i < shape_.n; ++i) e += alpha[i] * k_exponent(i, d);
    long s = sym_form(shape_, diff, d);
    out.c[{vec_add(k.first, alpha), k.second}] +=
        cf * Laurent::v(e) * Laurent::u(static_cast<int>(s));
  }
  out.trim();
  return out;
}

// ---------------------------------------------------------------------------
// dual basis

Laurent IHallAlgebra::u_factor(const KSClass& lambda) {
  return hall_.u_rescale_factor(lambda);
}

IHallElt IHallAlgebra::u_rescaled(const KSClass& lambda) {
  return u_elt(lambda) * u_factor(lambda);
}

IHallElt IHallAlgebra::dual_L(const KSClass& lambda) {
  auto it = dual_memo_.find(lambda);
  if (it != dual_memo_.end()) return it->second;
  IntVec d = lambda.empty() ? IntVec(shape_.n, 0) : hall_.class_dim(lambda);
  check_coverage(d);
  std::vector<IBasisKey> keys = basis_of_degree(d);
  int n = static_cast<int>(keys.size());
  const IndecTable& tab = hall_.table(2);
  // standard basis e_k = K_alpha diamond U_mu; diagonal over the Hall basis
  std::vector<Laurent> scale(n);
  for (int k = 0; k < n; ++k) {
    IHallElt e = diamond(keys[k].first, u_rescaled(keys[k].second));
    if (e.c.size() != 1 || e.c.begin()->first != keys[k])
      throw std::runtime_error("standard basis is not diagonal");
    scale[k] = e.c.begin()->second;
  }
  auto prec_ours = [&](int a, int b) {
    if (keys[a] == keys[b]) return false;
    if (keys[a].first != keys[b].first) {
      for (int i = 0; i < shape_.n; ++i)
        if (keys[b].first[i] < keys[a].first[i]) return false;
      return true;
    }
    return hom_leq(tab, keys[a].second, keys[b].second);
  };
  TriangularProblem tp;
  tp.n = n;
  tp.prec.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (prec_ours(b, a)) tp.prec[a][b] = 1;
  tp.bar_mat.assign(n, std::vector<Laurent>(n));
  std::map<IBasisKey, int> at;
  for (int k = 0; k < n; ++k) at[keys[k]] = k;
  for (int l = 0; l < n; ++l) {
    IHallElt b = bar(basis_elt(keys[l].first, keys[l].second) * scale[l]);
    for (auto& [bk, cf] : b.c) {
      auto f = at.find(bk);
      if (f == at.end()) throw std::runtime_error("bar image outside the degree block");
      tp.bar_mat[l][f->second] = cf.divide_or_throw(scale[f->second]);
    }
  }
  auto pm = lusztig_basis(tp);
  for (auto& lam2 : classes_with_dim(d)) {
    IBasisKey k0{IntVec(shape_.n, 0), lam2};
    int l0 = at.at(k0);
    IHallElt val;
    for (int mcol = 0; mcol < n; ++mcol) {
      if (pm[l0][mcol].is_zero()) continue;
      val += basis_elt(keys[mcol].first, keys[mcol].second) * (pm[l0][mcol] * scale[mcol]);
    }
    val.trim();
    dual_memo_[lam2] = std::move(val);
  }
  return dual_memo_.at(lambda);
}

IHallElt IHallAlgebra::dual_L(const IntVec& alpha, const KSClass& lambda) {
  return diamond(alpha, dual_L(lambda));
}

// ---------------------------------------------------------------------------
// presentation checks

std::vector<std::vector<IHallAlgebra::GenTerm>> IHallAlgebra::relation_words() const {
  std::vector<std::vector<GenTerm>> rels;
  int n = shape_.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (j == shape_.rho[i] && shape_.rho[i] != i) {
        rels.push_back({{{{'B', j}, {'B', i}}, Laurent::one()},
                        {{{'B', i}, {'B', j}}, -Laurent::one()},
                        {{{'K', i}}, -(Laurent::v(-1) - Laurent::v(1))},
                        {{{'K', j}}, Laurent::v(-1) - Laurent::v(1)}});
      } else if (cartan_[i][j] == 0) {
        rels.push_back({{{{'B', i}, {'B', j}}, Laurent::one()},
                        {{{'B', j}, {'B', i}}, -Laurent::one()}});
      } else if (cartan_[i][j] == -1) {
        std::vector<GenTerm> serre{
            {{{'B', i}, {'B', i}, {'B', j}}, Laurent::one()},
            {{{'B', j}, {'B', i}, {'B', i}}, Laurent::one()},
            {{{'B', i}, {'B', j}, {'B', i}}, -qint(2)}};
        if (shape_.rho[i] == i)
          serre.push_back({{{'K', i}, {'B', j}},
                           Laurent::v(1) * (Laurent::v(1) - Laurent::v(-1)) *
                               (Laurent::v(1) - Laurent::v(-1))});
        rels.push_back(std::move(serre));
      }
    }
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < n; ++i) {
      IntVec ei(n, 0);
      ei[i] = 1;
      rels.push_back({{{{'K', l}, {'B', i}}, Laurent::one()},
                      {{{'B', i}, {'K', l}}, -Laurent::v(k_exponent(l, ei))}});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rels.push_back({{{{'K', i}, {'K', j}}, Laurent::one()},
                      {{{'K', j}, {'K', i}}, -Laurent::one()}});
  return rels;
}

void IHallAlgebra::verify_presentation() {
  for (auto& rel : relation_words()) {
    IHallElt acc;
    for (auto& term : rel) {
      IHallElt t = unit();
      for (auto& [kind, i] : term.word)
        t = product(t, kind == 'B' ? bgen(i) : kgen(i));
      acc += t * term.coeff;
    }
    acc.trim();
    if (!acc.is_zero()) throw std::runtime_error("presentation relation failed");
  }
}

void IHallAlgebra::verify_presentation_at(long p) {
  using PElt = std::map<IBasisKey, QV>;
  auto of = [&](const IHallElt& x) {
    PElt r;
    for (auto& [k, cf] : norm(x).c) r[k] = qv_of(cf, p);
    return r;
  };
  auto pmul = [&](const PElt& a, const PElt& b) {
    PElt r;
    for (auto& [ka, ca] : a)
      for (auto& [kb, cb] : b) {
        QV cf = qv_mul(ca, cb, p);
        for (auto& [k, w] : prime_product(p, ka, kb)) {
          QV add = qv_mul(cf, w, p);
          auto [jt, fresh] = r.try_emplace(k, add);
          if (!fresh) jt->second = qv_add(jt->second, add);
        }
      }
    return r;
  };
  for (auto& rel : relation_words()) {
    PElt acc;
    for (auto& term : rel) {
      PElt t = of(unit());
      for (auto& [kind, i] : term.word) t = pmul(t, of(kind == 'B' ? bgen(i) : kgen(i)));
      QV cf = qv_of(term.coeff, p);
      for (auto& [k, w] : t) {
        QV add = qv_mul(cf, w, p);
        auto [jt, fresh] = acc.try_emplace(k, add);
        if (!fresh) jt->second = qv_add(jt->second, add);
      }
    }
    for (auto& [k, w] : acc)
      if (!qv_is0(w)) throw std::runtime_error("presentation relation failed at a prime");
  }
}

std::string IHallAlgebra::elt_str(const IHallElt& xin) {
  IHallElt x = norm(xin);
  if (x.c.empty()) return "0";
  const IndecTable& tab = hall_.table(2);
  std::ostringstream os;
  bool first = true;
  for (auto& [k, cf] : x.c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << cf.str() << ")[" << (k.second.empty() ? "0" : tab.class_str(k.second));
    bool anyk = false;
    for (int i = 0; i < shape_.n; ++i)
      if (k.first[i]) anyk = true;
    if (anyk) os << "; K" << dimvec_str(k.first);
    os << "]";
  }
  return os.str();
}

}  // namespace qhall
