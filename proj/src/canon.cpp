#include "qhall/canon.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {

// strict Hom-order: a strictly more degenerate than b
bool strictly_below(const IndecTable& t, const KSClass& a, const KSClass& b) {
  return a != b && hom_leq(t, a, b);
}

std::map<KSClass, Frac> transport_frac(HallAlgebra& src, HallAlgebra& dst,
                                       const std::map<KSClass, Frac>& x) {
  std::map<KSClass, Frac> acc;
  for (auto& [cls, coeff] : x)
    for (auto& [w, f] : src.monomial_expression(cls)) {
      Frac scale = coeff * f;
      for (auto& [k, c] : dst.word_product(w).c) acc[k] += scale * Frac(c);
    }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

}  // namespace

std::vector<KSClass> classes_of_dim(HallAlgebra& h, const IntVec& d) {
  const auto& roots = h.roots();
  std::vector<KSClass> out;
  KSClass cur;
  std::function<void(size_t, IntVec)> rec = [&](size_t k, IntVec left) {
    bool empty = std::all_of(left.begin(), left.end(), [](int x) { return x == 0; });
    if (empty) {
      out.push_back(cur);
      return;
    }
    if (k == roots.size()) return;
    int cap = 1 << 20;
    for (size_t i = 0; i < left.size(); ++i)
      if (roots[k][i] > 0) cap = std::min(cap, left[i] / roots[k][i]);
    for (int m = 0; m <= cap; ++m) {
      if (m > 0) {
        cur[static_cast<int>(k)] = m;
        for (size_t i = 0; i < left.size(); ++i) left[i] -= roots[k][i];
      }
      rec(k + 1, left);
    }
    cur.erase(static_cast<int>(k));
    return;
  };
  rec(0, d);
  return out;
}

BasisFamily canonical_basis(HallAlgebra& h, const IntVec& d) {
  BasisFamily f;
  f.classes = classes_of_dim(h, d);
  int n = static_cast<int>(f.classes.size());
  const IndecTable& t = h.table(2);
  TriangularProblem p;
  p.n = n;
  p.prec.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (strictly_below(t, f.classes[a], f.classes[b])) p.prec[a][b] = 1;
  p.bar_mat.assign(n, std::vector<Laurent>(n));
  for (int l = 0; l < n; ++l) {
    const KSClass& cl = f.classes[l];
    HallElt pu = h.psi(HallAlgebra::unit(cl));
    Laurent al = h.a_laurent(cl);
    int dl = static_cast<int>(h.dim_end(cl) - h.dim_total(cl));
    for (int m = 0; m < n; ++m) {
      auto it = pu.c.find(f.classes[m]);
      if (it == pu.c.end()) continue;
      const KSClass& cm = f.classes[m];
      int dm = static_cast<int>(h.dim_end(cm) - h.dim_total(cm));
      // psi(E_l) = v^{-dl} bar(a_l)^{-1} psi(u_l); u_m = a_m v^{-dm} E_m
      Frac entry = Frac(it->second * h.a_laurent(cm) * Laurent::v(-dl - dm)) / Frac(al.bar());
      p.bar_mat[l][m] = entry.to_laurent_or_throw("psi matrix entry is not Laurent");
    }
  }
  f.trans = lusztig_basis(p);
  return f;
}

BasisFamily dual_canonical_basis(HallAlgebra& h, const IntVec& d) {
  BasisFamily f;
  f.classes = classes_of_dim(h, d);
  int n = static_cast<int>(f.classes.size());
  const IndecTable& t = h.table(2);
  TriangularProblem p;
  p.n = n;
  p.prec.assign(n, std::vector<char>(n, 0));
  // corrections sit above in the degeneration order
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (strictly_below(t, f.classes[b], f.classes[a])) p.prec[a][b] = 1;
  p.bar_mat.assign(n, std::vector<Laurent>(n));
  for (int l = 0; l < n; ++l) {
    HallElt bu = h.bar(HallAlgebra::unit(f.classes[l]));
    Laurent sl = h.u_rescale_factor(f.classes[l]);
    for (int m = 0; m < n; ++m) {
      auto it = bu.c.find(f.classes[m]);
      if (it == bu.c.end()) continue;
      Laurent sm = h.u_rescale_factor(f.classes[m]);
      // bar(U_l) = bar(v^{s_l}) bar(u_l); u_m = v^{-s_m} U_m
      p.bar_mat[l][m] = it->second * sl.bar() * sm.pow(-1);
    }
  }
  f.trans = lusztig_basis(p);
  return f;
}

long n_exponent(const Quiver& q, const IntVec& d) {
  // <d,d>_Q - 2 dim: the diagonal pairing (B_l, c_l) is exactly
  // u^{<d,d> - 2 dim}, independent of the class within the degree
  long dim = 0;
  for (int x : d) dim += x;
  return euler_form(q, d, d) - 2 * dim;
}

std::vector<std::map<KSClass, Frac>> family_in_u(HallAlgebra& h, const BasisFamily& f,
                                                 bool canonical) {
  std::vector<std::map<KSClass, Frac>> out;
  for (size_t l = 0; l < f.classes.size(); ++l) {
    std::map<KSClass, Frac> elt;
    for (size_t m = 0; m < f.classes.size(); ++m) {
      if (f.trans[l][m].is_zero()) continue;
      const KSClass& cm = f.classes[m];
      if (canonical) {
        int dm = static_cast<int>(h.dim_end(cm) - h.dim_total(cm));
        elt[cm] = Frac(f.trans[l][m] * Laurent::v(dm)) / Frac(h.a_laurent(cm));
      } else {
        elt[cm] = Frac(f.trans[l][m] * h.u_rescale_factor(cm));
      }
    }
    out.push_back(std::move(elt));
  }
  return out;
}

void pairing_duality_check(HallAlgebra& h, const IntVec& d) {
  BasisFamily can = canonical_basis(h, d);
  BasisFamily dual = dual_canonical_basis(h, d);
  auto bu = family_in_u(h, can, true);
  auto cu = family_in_u(h, dual, false);
  long n = n_exponent(h.quiver(), d);
  Frac shift(Laurent::u(static_cast<int>(-n)));
  for (size_t a = 0; a < bu.size(); ++a)
    for (size_t b = 0; b < cu.size(); ++b) {
      Frac pair;
      for (auto& [k, x] : bu[a]) {
        auto it = cu[b].find(k);
        if (it != cu[b].end()) pair += x * it->second * Frac(h.a_laurent(k));
      }
      pair *= shift;
      Laurent got = pair.to_laurent_or_throw("pairing value is not Laurent");
      Laurent want = (can.classes[a] == dual.classes[b]) ? Laurent::one() : Laurent::zero();
      if (got != want) {
        std::ostringstream os;
        os << "pairing duality failed at (" << h.table(2).class_str(can.classes[a]) << ", "
           << h.table(2).class_str(dual.classes[b]) << "): " << got.str();
        throw std::runtime_error(os.str());
      }
    }
}

void fourier_check(HallAlgebra& a, HallAlgebra& b, const IntVec& d) {
  for (bool canonical : {true, false}) {
    BasisFamily fa = canonical ? canonical_basis(a, d) : dual_canonical_basis(a, d);
    BasisFamily fb = canonical ? canonical_basis(b, d) : dual_canonical_basis(b, d);
    auto ua = family_in_u(a, fa, canonical);
    auto ub = family_in_u(b, fb, canonical);
    if (ua.size() != ub.size())
      throw std::runtime_error("orientation check: family sizes differ");
    std::vector<char> used(ub.size(), 0);
    for (size_t i = 0; i < ua.size(); ++i) {
      auto img = transport_frac(a, b, ua[i]);
      bool found = false;
      for (size_t j = 0; j < ub.size() && !found; ++j) {
        if (used[j] || img.size() != ub[j].size()) continue;
        bool eq = true;
        for (auto& [k, x] : img) {
          auto it = ub[j].find(k);
          if (it == ub[j].end() || !(it->second == x)) {
            eq = false;
            break;
          }
        }
        if (eq) {
          used[j] = 1;
          found = true;
        }
      }
      if (!found) {
        std::ostringstream os;
        os << "orientation check: no match for basis element of "
           << a.table(2).class_str(fa.classes[i]);
        throw std::runtime_error(os.str());
      }
    }
  }
}

std::vector<std::vector<Laurent>> invert_unitriangular(
    const std::vector<std::vector<Laurent>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Frac>> a(n, std::vector<Frac>(n)), inv(n, std::vector<Frac>(n));
  for (int i = 0; i < n; ++i) {
    inv[i][i] = Frac(Laurent::one());
    for (int j = 0; j < n; ++j) a[i][j] = Frac(m[i][j]);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Frac lead = a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] = a[col][j] / lead;
      inv[col][j] = inv[col][j] / lead;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Frac f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  std::vector<std::vector<Laurent>> out(n, std::vector<Laurent>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[i][j] = inv[i][j].to_laurent_or_throw("inverse is not Laurent");
  return out;
}

}  // namespace qhall
