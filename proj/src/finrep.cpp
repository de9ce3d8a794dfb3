#include "qhall/finrep.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {

long mod_inv(long a, long p) {
  // extended Euclid; p prime, a != 0 mod p
  long t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    long qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) throw std::logic_error("mod_inv: not invertible");
  return ((t % p) + p) % p;
}

// in-place row reduction; returns rank, records pivot columns
int row_reduce(FpMat& m, long p, std::vector<int>* pivots = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m.a[rank], m.a[piv]);
    long inv = mod_inv(m.a[rank][col], p);
    for (int c = col; c < m.cols; ++c)
      m.a[rank][c] = static_cast<int>(m.a[rank][c] * inv % p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.a[r][col] == 0) continue;
      long f = m.a[r][col];
      for (int c = col; c < m.cols; ++c)
        m.a[r][c] = static_cast<int>(((m.a[r][c] - f * m.a[rank][c]) % p + p) % p);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

// the intertwiner system rows for f_t M_a = N_a f_s over all arrows
FpMat hom_system(const Quiver& q, long p, const FqRep& m, const FqRep& n) {
  std::vector<int> off(q.n + 1, 0);
  for (int i = 0; i < q.n; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  int unknowns = off[q.n];
  int rows = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a)
    rows += n.dims[q.arrows[a].second] * m.dims[q.arrows[a].first];
  FpMat sys(rows, unknowns);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    const FpMat& ma = m.mats[a];
    const FpMat& na = n.mats[a];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        // (f_t M_a)_{rc} - (N_a f_s)_{rc} = 0
        for (int k = 0; k < m.dims[t]; ++k)
          sys.a[row][off[t] + r * m.dims[t] + k] =
              static_cast<int>((sys.a[row][off[t] + r * m.dims[t] + k] + ma.a[k][c]) % p);
        for (int k = 0; k < n.dims[s]; ++k)
          sys.a[row][off[s] + k * m.dims[s] + c] = static_cast<int>(
              ((sys.a[row][off[s] + k * m.dims[s] + c] - na.a[r][k]) % p + p) % p);
        ++row;
      }
  }
  return sys;
}

}  // namespace

FpMat fp_mul(const FpMat& x, const FpMat& y, long p) {
  if (x.cols != y.rows) throw std::invalid_argument("fp_mul: shape mismatch");
  FpMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      long f = x.a[i][k];
      for (int j = 0; j < y.cols; ++j)
        r.a[i][j] = static_cast<int>((r.a[i][j] + f * y.a[k][j]) % p);
    }
  return r;
}

int fp_rank(FpMat m, long p) { return row_reduce(m, p); }

std::vector<std::vector<int>> fp_coker_basis(const FpMat& m, long p) {
  // column space of m = row space of m^T; complement = non-pivot coords
  FpMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.a[j][i] = m.a[i][j];
  std::vector<int> pivots;
  row_reduce(t, p, &pivots);
  std::vector<std::vector<int>> basis;
  size_t pi = 0;
  for (int i = 0; i < m.rows; ++i) {
    if (pi < pivots.size() && pivots[pi] == i) {
      ++pi;
      continue;
    }
    std::vector<int> e(m.rows, 0);
    e[i] = 1;
    basis.push_back(e);
  }
  return basis;
}

FqRep direct_sum(const Quiver& q, const FqRep& m, const FqRep& n) {
  FqRep r;
  r.dims.resize(q.n);
  for (int i = 0; i < q.n; ++i) r.dims[i] = m.dims[i] + n.dims[i];
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    FpMat b(r.dims[t], r.dims[s]);
    for (int i = 0; i < m.dims[t]; ++i)
      for (int j = 0; j < m.dims[s]; ++j) b.a[i][j] = m.mats[a].a[i][j];
    for (int i = 0; i < n.dims[t]; ++i)
      for (int j = 0; j < n.dims[s]; ++j) b.a[m.dims[t] + i][m.dims[s] + j] = n.mats[a].a[i][j];
    r.mats.push_back(std::move(b));
  }
  return r;
}

int hom_dim(const Quiver& q, long p, const FqRep& m, const FqRep& n) {
  int unknowns = 0;
  for (int i = 0; i < q.n; ++i) unknowns += n.dims[i] * m.dims[i];
  if (unknowns == 0) return 0;
  FpMat sys = hom_system(q, p, m, n);
  return unknowns - fp_rank(std::move(sys), p);
}

long ext_dim(const Quiver& q, long p, const FqRep& m, const FqRep& n) {
  return hom_dim(q, p, m, n) - euler_form(q, m.dims, n.dims);
}

int IndecTable::root_index(const IntVec& beta) const {
  auto it = std::find(roots.begin(), roots.end(), beta);
  return it == roots.end() ? -1 : static_cast<int>(it - roots.begin());
}

IntVec IndecTable::class_dim(const KSClass& c) const {
  IntVec d(shape.n, 0);
  for (auto& [k, m] : c)
    for (int i = 0; i < shape.n; ++i) d[i] += m * roots[k][i];
  return d;
}

FqRep IndecTable::rep_of(const KSClass& c) const {
  FqRep r;
  r.dims.assign(shape.n, 0);
  for (size_t a = 0; a < shape.arrows.size(); ++a) r.mats.emplace_back(0, 0);
  for (auto& [k, m] : c)
    for (int i = 0; i < m; ++i) r = direct_sum(shape, r, reps[k]);
  // fix up zero-size matrices' shapes
  for (size_t a = 0; a < shape.arrows.size(); ++a) {
    auto [s, t] = shape.arrows[a];
    if (r.mats[a].rows != r.dims[t] || r.mats[a].cols != r.dims[s])
      r.mats[a] = FpMat(r.dims[t], r.dims[s]);
  }
  return r;
}

KSClass IndecTable::simple(int vertex) const {
  IntVec e(shape.n, 0);
  e[vertex] = 1;
  int k = root_index(e);
  if (k < 0) throw std::logic_error("simple root missing from table");
  return {{k, 1}};
}

std::string IndecTable::class_str(const KSClass& c) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, m] : c) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << "M" << dimvec_str(roots[k]);
  }
  return os.str();
}

IndecTable build_indecomposables(const Quiver& shape, long p, unsigned seed) {
  IndecTable t;
  t.shape = shape;
  t.p = p;
  t.roots = positive_roots(shape);
  for (size_t k = 0; k < t.roots.size(); ++k) {
    const IntVec& beta = t.roots[k];
    FqRep m;
    m.dims = beta;
    bool thin = std::all_of(beta.begin(), beta.end(), [](int d) { return d <= 1; });
    std::mt19937 rng(seed + 1000003u * static_cast<unsigned>(k));
    std::uniform_int_distribution<int> coin(0, static_cast<int>(p) - 1);
    bool found = false;
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
      m.mats.clear();
      for (auto& [s, tt] : shape.arrows) {
        FpMat a(beta[tt], beta[s]);
        for (int r = 0; r < a.rows; ++r)
          for (int c = 0; c < a.cols; ++c)
            a.a[r][c] = (thin && attempt == 0) ? 1 : coin(rng);
        m.mats.push_back(std::move(a));
      }
      found = hom_dim(shape, p, m, m) == 1;
    }
    if (!found)
      throw std::runtime_error("indecomposable search failed at " + dimvec_str(beta));
    t.reps.push_back(std::move(m));
  }
  int nr = static_cast<int>(t.roots.size());
  t.hom.assign(nr, IntVec(nr, 0));
  for (int b = 0; b < nr; ++b)
    for (int g = 0; g < nr; ++g) t.hom[b][g] = hom_dim(shape, p, t.reps[b], t.reps[g]);
  return t;
}

KSClass decompose(const IndecTable& t, const FqRep& m) {
  int nr = static_cast<int>(t.roots.size());
  std::vector<long> h(nr);
  for (int b = 0; b < nr; ++b) h[b] = hom_dim(t.shape, t.p, t.reps[b], m);
  // solve h[b] = sum_g lambda_g hom[b][g] over the rationals
  std::vector<std::vector<Rational>> sys(nr, std::vector<Rational>(nr + 1));
  for (int b = 0; b < nr; ++b) {
    for (int g = 0; g < nr; ++g) sys[b][g] = t.hom[b][g];
    sys[b][nr] = h[b];
  }
  int rank = 0;
  for (int col = 0; col < nr && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (sys[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(sys[rank], sys[piv]);
    Rational inv = Rational(1) / sys[rank][col];
    for (int c = col; c <= nr; ++c) sys[rank][c] *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == rank || sys[r][col] == 0) continue;
      Rational f = sys[r][col];
      for (int c = col; c <= nr; ++c) sys[r][c] -= f * sys[rank][c];
    }
    ++rank;
  }
  if (rank != nr) throw std::runtime_error("not a module of this shape");
  KSClass out;
  IntVec check(t.shape.n, 0);
  for (int g = 0; g < nr; ++g) {
    Rational lg = sys[g][nr];
    if (denominator(lg) != 1 || lg < 0) throw std::runtime_error("not a module of this shape");
    int mult = static_cast<int>(numerator(lg));
    if (mult > 0) out[g] = mult;
    for (int i = 0; i < t.shape.n; ++i) check[i] += mult * t.roots[g][i];
  }
  if (check != m.dims) throw std::runtime_error("not a module of this shape");
  return out;
}

std::map<KSClass, BigInt> ext_census(const IndecTable& t, const KSClass& x,
                                     const KSClass& z, long cap) {
  const Quiver& q = t.shape;
  const long p = t.p;
  FqRep mx = t.rep_of(x), mz = t.rep_of(z);
  // d : sum_i Hom(X_i, Z_i) -> sum_a Hom(X_{s(a)}, Z_{t(a)}),
  // d(f)_a = Z_a f_s - f_t X_a; Ext^1 is the cokernel.
  std::vector<int> off(q.n + 1, 0);
  for (int i = 0; i < q.n; ++i) off[i + 1] = off[i] + mz.dims[i] * mx.dims[i];
  std::vector<int> aoff(q.arrows.size() + 1, 0);
  for (size_t a = 0; a < q.arrows.size(); ++a)
    aoff[a + 1] = aoff[a] + mz.dims[q.arrows[a].second] * mx.dims[q.arrows[a].first];
  FpMat d(aoff.back(), off.back());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, tt] = q.arrows[a];
    for (int r = 0; r < mz.dims[tt]; ++r)
      for (int c = 0; c < mx.dims[s]; ++c) {
        int row = aoff[a] + r * mx.dims[s] + c;
        for (int k = 0; k < mz.dims[s]; ++k)
          d.a[row][off[s] + k * mx.dims[s] + c] = static_cast<int>(
              (d.a[row][off[s] + k * mx.dims[s] + c] + mz.mats[a].a[r][k]) % p);
        for (int k = 0; k < mx.dims[tt]; ++k)
          d.a[row][off[tt] + r * mx.dims[tt] + k] = static_cast<int>(
              ((d.a[row][off[tt] + r * mx.dims[tt] + k] - mx.mats[a].a[k][c]) % p + p) % p);
      }
  }
  auto basis = fp_coker_basis(d, p);
  long e = static_cast<long>(basis.size());
  if (e != ext_dim(q, p, mx, mz))
    throw std::logic_error("ext census: cokernel dimension mismatch");
  BigInt total = 1;
  for (long i = 0; i < e; ++i) {
    total *= p;
    if (total > cap) {
      std::ostringstream os;
      os << "census cap: need " << "p^" << e << " = " << total << "+ enumerations, cap " << cap;
      throw std::runtime_error(os.str());
    }
  }
  std::map<KSClass, BigInt> census;
  std::vector<int> digits(e, 0);
  long count = static_cast<long>(total);
  for (long it = 0; it < count; ++it) {
    // epsilon = sum digits[k] * basis[k]
    std::vector<int> eps(aoff.back(), 0);
    for (long k = 0; k < e; ++k) {
      if (digits[k] == 0) continue;
      for (int i = 0; i < aoff.back(); ++i)
        eps[i] = static_cast<int>((eps[i] + static_cast<long>(digits[k]) * basis[k][i]) % p);
    }
    // middle term: Y_i = Z_i + X_i, Y_a = [[Z_a, eps_a], [0, X_a]]
    FqRep y;
    y.dims.resize(q.n);
    for (int i = 0; i < q.n; ++i) y.dims[i] = mz.dims[i] + mx.dims[i];
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto [s, tt] = q.arrows[a];
      FpMat b(y.dims[tt], y.dims[s]);
      for (int i = 0; i < mz.dims[tt]; ++i)
        for (int j = 0; j < mz.dims[s]; ++j) b.a[i][j] = mz.mats[a].a[i][j];
      for (int i = 0; i < mx.dims[tt]; ++i)
        for (int j = 0; j < mx.dims[s]; ++j)
          b.a[mz.dims[tt] + i][mz.dims[s] + j] = mx.mats[a].a[i][j];
      for (int i = 0; i < mz.dims[tt]; ++i)
        for (int j = 0; j < mx.dims[s]; ++j)
          b.a[i][mz.dims[s] + j] = eps[aoff[a] + i * mx.dims[s] + j];
      y.mats.push_back(std::move(b));
    }
    census[decompose(t, y)] += 1;
    // increment base-p counter
    for (long k = 0; k < e; ++k) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
  }
  BigInt sum = 0;
  for (auto& [cls, n] : census) sum += n;
  if (sum != total) throw std::logic_error("ext census: counts do not sum to p^e");
  return census;
}

BigInt gl_order(int n, long p) {
  BigInt pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  BigInt r = 1, pk = 1;
  for (int k = 0; k < n; ++k) {
    r *= pn - pk;
    pk *= p;
  }
  return r;
}

BigInt aut_order(const IndecTable& t, const KSClass& c) {
  long dim_end = 0, sum_sq = 0;
  for (auto& [b, mb] : c)
    for (auto& [g, mg] : c) dim_end += static_cast<long>(mb) * mg * t.hom[b][g];
  BigInt r = 1;
  for (auto& [b, m] : c) {
    sum_sq += static_cast<long>(m) * m;
    r *= gl_order(m, t.p);
  }
  for (long i = 0; i < dim_end - sum_sq; ++i) r *= t.p;
  return r;
}

BigInt hall_number_F(const IndecTable& t, const KSClass& x, const KSClass& z,
                     const KSClass& y, long cap) {
  auto census = ext_census(t, x, z, cap);
  auto it = census.find(y);
  if (it == census.end()) return 0;
  int h = hom_dim(t.shape, t.p, t.rep_of(x), t.rep_of(z));
  BigInt ph = 1;
  for (int i = 0; i < h; ++i) ph *= t.p;
  Rational f = Rational(it->second) * Rational(aut_order(t, y)) /
               (Rational(ph) * Rational(aut_order(t, x)) * Rational(aut_order(t, z)));
  if (denominator(f) != 1 || f < 0)
    throw std::logic_error("Hall number is not a nonnegative integer");
  return numerator(f);
}

long class_hom_to_root(const IndecTable& t, const KSClass& c, int beta_idx) {
  long r = 0;
  for (auto& [g, m] : c) r += static_cast<long>(m) * t.hom[g][beta_idx];
  return r;
}

bool hom_leq(const IndecTable& t, const KSClass& a, const KSClass& b) {
  if (t.class_dim(a) != t.class_dim(b))
    throw std::invalid_argument("hom_leq: dimension vectors differ");
  for (size_t k = 0; k < t.roots.size(); ++k)
    if (class_hom_to_root(t, a, static_cast<int>(k)) <
        class_hom_to_root(t, b, static_cast<int>(k)))
      return false;
  return true;
}

}  // namespace qhall
