#include "qhall/double_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qhall/triangle.hpp"

namespace qhall {

namespace {

IntVec zero_vec(int n) { return IntVec(n, 0); }

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool vec_leq(const IntVec& a, const IntVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool vec_nonneg(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

// all componentwise vectors 0 <= k <= cap
std::vector<IntVec> boxed_vectors(const IntVec& cap) {
  std::vector<IntVec> out{zero_vec(static_cast<int>(cap.size()))};
  for (size_t i = 0; i < cap.size(); ++i) {
    std::vector<IntVec> next;
    for (auto& v : out)
      for (int k = 0; k <= cap[i]; ++k) {
        IntVec w = v;
        w[i] = k;
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

Frac vpow(long e) { return Frac(Laurent::u(static_cast<int>(2 * e))); }

}  // namespace

DDElt& DDElt::operator+=(const DDElt& o) {
  for (auto& [m, f] : o.c) c[m] += f;
  trim();
  return *this;
}

DDElt& DDElt::operator-=(const DDElt& o) {
  for (auto& [m, f] : o.c) c[m] -= f;
  trim();
  return *this;
}

DDElt DDElt::operator*(const Frac& s) const {
  DDElt r;
  if (s.is_zero()) return r;
  for (auto& [m, f] : c) r.c[m] = f * s;
  r.trim();
  return r;
}

void DDElt::trim() {
  for (auto it = c.begin(); it != c.end();)
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
}

DoubleAlgebra::DoubleAlgebra(Quiver shape)
    : shape_(std::move(shape)), cartan_(cartan_matrix(shape_)), hall_(shape_) {}

long DoubleAlgebra::cpair(const IntVec& a, const IntVec& b) const {
  long s = 0;
  for (int i = 0; i < shape_.n; ++i)
    for (int j = 0; j < shape_.n; ++j) s += static_cast<long>(a[i]) * cartan_[i][j] * b[j];
  return s;
}

DDElt DoubleAlgebra::one() const {
  DDElt r;
  r.c[PBWMono{{}, {}, zero_vec(shape_.n), zero_vec(shape_.n)}] = Frac(Laurent::one());
  return r;
}

DDElt DoubleAlgebra::Kmono(const IntVec& mu, const IntVec& nu) {
  DDElt r;
  r.c[PBWMono{{}, {}, mu, nu}] = Frac(Laurent::one());
  return r;
}

DDElt DoubleAlgebra::Ki(int i, int e) {
  IntVec mu = zero_vec(shape_.n);
  mu[i] = e;
  return Kmono(mu, zero_vec(shape_.n));
}

DDElt DoubleAlgebra::Kpi(int i, int e) {
  IntVec nu = zero_vec(shape_.n);
  nu[i] = e;
  return Kmono(zero_vec(shape_.n), nu);
}

DDElt DoubleAlgebra::e_class(const KSClass& cls) {
  DDElt r;
  r.c[PBWMono{{}, cls, zero_vec(shape_.n), zero_vec(shape_.n)}] = Frac(Laurent::one());
  return r;
}

DDElt DoubleAlgebra::f_class(const KSClass& cls) {
  DDElt r;
  r.c[PBWMono{cls, {}, zero_vec(shape_.n), zero_vec(shape_.n)}] = Frac(Laurent::one());
  return r;
}

DDElt DoubleAlgebra::chevE(int i) { return e_class(hall_.simple_class(i)) * Frac(Laurent::u(-1)); }

DDElt DoubleAlgebra::chevF(int i) { return f_class(hall_.simple_class(i)) * Frac(Laurent::u(-1)); }

DDElt DoubleAlgebra::mul_e_class(const DDElt& x, const KSClass& cls) {
  if (cls.empty()) return x;
  IntVec w = hall_.class_dim(cls);
  DDElt out;
  for (auto& [m, f] : x.c) {
    Frac s = f * vpow(cpair(vec_sub(m.mu, m.nu), w));
    HallElt prod = hall_.product(HallAlgebra::unit(m.ep), HallAlgebra::unit(cls));
    for (auto& [ecls, coeff] : prod.c) out.c[PBWMono{m.fm, ecls, m.mu, m.nu}] += s * Frac(coeff);
  }
  out.trim();
  return out;
}

DDElt DoubleAlgebra::mul_chev_e(const DDElt& x, int i) {
  return mul_e_class(x, hall_.simple_class(i)) * Frac(Laurent::u(-1));
}

const DDElt& DoubleAlgebra::class_f(const KSClass& b, int j) {
  return fstraight(hall_.class_dim(b), j).at(b);
}

const std::map<KSClass, DDElt>& DoubleAlgebra::fstraight(const IntVec& d, int j) {
  auto key = std::make_pair(d, j);
  auto it = fstraight_memo_.find(key);
  if (it != fstraight_memo_.end()) return it->second;
  std::map<KSClass, DDElt> out;
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) {
    out[KSClass{}] = chevF(j);
    return fstraight_memo_.emplace(key, std::move(out)).first->second;
  }
  auto classes = classes_of_dim(hall_, d);
  std::map<KSClass, size_t> col;
  for (auto& c : classes) col.emplace(c, col.size());
  // one multiplication step: sum_l g^l_{c,a_k} X_l = X_c u_{a_k} + delta-term
  struct Row {
    std::vector<Frac> g;
    DDElt lhs;
  };
  std::vector<Row> pivots(classes.size());
  std::vector<char> have(classes.size(), 0);
  for (int k = 0; k < shape_.n; ++k) {
    if (d[k] == 0) continue;
    IntVec d2 = d;
    d2[k] -= 1;
    const auto& sub = fstraight(d2, j);
    for (auto& [c, xc] : sub) {
      Row row;
      row.g.assign(classes.size(), Frac());
      for (auto& [l, gl] : hall_.g_table(c, hall_.simple_class(k)))
        row.g[col.at(l)] = Frac(gl);
      row.lhs = mul_e_class(xc, hall_.simple_class(k));
      if (k == j) {
        // u_{a_j} F_j = F_j u_{a_j} + v^{1/2}(v^{-1}-v)(K_j - K'_j)
        Frac s = Frac(Laurent::u(1) * (Laurent::v(-1) - Laurent::v(1)));
        DDElt kt, kpt;
        PBWMono base{KSClass{}, c, IntVec(shape_.n, 0), IntVec(shape_.n, 0)};
        PBWMono mk = base, mkp = base;
        mk.mu[j] += 1;
        mkp.nu[j] += 1;
        kt.c[mk] = s;
        kpt.c[mkp] = s;
        row.lhs += kt - kpt;
      }
      // reduce against the pivots already found
      for (size_t p = 0; p < classes.size(); ++p) {
        if (!have[p] || row.g[p].is_zero()) continue;
        Frac f = row.g[p];
        for (size_t q = 0; q < classes.size(); ++q) row.g[q] -= f * pivots[p].g[q];
        row.lhs -= pivots[p].lhs * f;
      }
      size_t pc = classes.size();
      for (size_t q = 0; q < classes.size(); ++q)
        if (!row.g[q].is_zero()) {
          pc = q;
          break;
        }
      if (pc == classes.size()) {
        if (!row.lhs.is_zero())
          throw std::runtime_error("straightening inconsistency");
        continue;
      }
      Frac lead = row.g[pc];
      for (auto& x : row.g) x = x / lead;
      row.lhs = row.lhs * (Frac(Laurent::one()) / lead);
      for (size_t p = 0; p < classes.size(); ++p) {
        if (!have[p] || pivots[p].g[pc].is_zero()) continue;
        Frac f = pivots[p].g[pc];
        for (size_t q = 0; q < classes.size(); ++q) pivots[p].g[q] -= f * row.g[q];
        pivots[p].lhs -= row.lhs * f;
      }
      pivots[pc] = std::move(row);
      have[pc] = 1;
    }
  }
  for (size_t p = 0; p < classes.size(); ++p) {
    if (!have[p]) throw std::runtime_error("straightening system is deficient");
    out[classes[p]] = pivots[p].lhs;
  }
  return fstraight_memo_.emplace(key, std::move(out)).first->second;
}

DDElt DoubleAlgebra::mul_single_f(const DDElt& x, int j) {
  DDElt out;
  for (auto& [m, f] : x.c) {
    long ce = 0;
    for (int i = 0; i < shape_.n; ++i) ce += static_cast<long>(m.nu[i] - m.mu[i]) * cartan_[i][j];
    Frac s = f * vpow(ce);
    const DDElt& ef = class_f(m.ep, j);
    for (auto& [m2, f2] : ef.c) {
      Frac s2 = s * f2;
      if (m.fm.empty()) {
        out.c[PBWMono{m2.fm, m2.ep, vec_add(m.mu, m2.mu), vec_add(m.nu, m2.nu)}] += s2;
      } else {
        HallElt fprod = hall_.product(HallAlgebra::unit(m.fm), HallAlgebra::unit(m2.fm));
        for (auto& [fcls, coeff] : fprod.c)
          out.c[PBWMono{fcls, m2.ep, vec_add(m.mu, m2.mu), vec_add(m.nu, m2.nu)}] +=
              s2 * Frac(coeff);
      }
    }
  }
  out.trim();
  return out;
}

DDElt DoubleAlgebra::mul_f_class(const DDElt& x, const KSClass& cls) {
  if (cls.empty()) return x;
  DDElt out;
  for (auto& [w, mw] : hall_.monomial_expression(cls)) {
    DDElt t = x;
    for (int letter : w) t = mul_single_f(t, letter);
    out += t * (mw * Frac(Laurent::u(static_cast<int>(w.size()))));
  }
  return out;
}

DDElt DoubleAlgebra::multiply(const DDElt& x, const DDElt& y) {
  DDElt out;
  for (auto& [m, f] : y.c) {
    DDElt t = mul_f_class(x, m.fm);
    t = mul_e_class(t, m.ep);
    for (auto& [m2, f2] : t.c)
      out.c[PBWMono{m2.fm, m2.ep, vec_add(m2.mu, m.mu), vec_add(m2.nu, m.nu)}] += f * f2;
  }
  out.trim();
  return out;
}

DDElt DoubleAlgebra::power(const DDElt& x, int m) {
  DDElt r = one();
  for (int k = 0; k < m; ++k) r = multiply(r, x);
  return r;
}

DDElt DoubleAlgebra::divided_power(const DDElt& x, int m) {
  DDElt r = power(x, m) * (Frac(Laurent::one()) / Frac(qfact(m)));
  // integrality lives in the w-basis: u_b = a_b w_b on both class parts
  for (auto& [mono, f] : r.c) {
    Frac scaled = f;
    if (!mono.fm.empty()) scaled *= Frac(hall_.a_laurent(mono.fm));
    if (!mono.ep.empty()) scaled *= Frac(hall_.a_laurent(mono.ep));
    scaled.to_laurent_or_throw("divided power is not integral");
  }
  return r;
}

std::map<KSClass, Frac> DoubleAlgebra::side_map(const KSClass& cls, DDMap which) {
  std::map<KSClass, Frac> out;
  if (cls.empty()) {
    out[KSClass{}] = Frac(Laurent::one());
    return out;
  }
  for (auto& [w, mw] : hall_.monomial_expression(cls)) {
    int l = static_cast<int>(w.size());
    Word w2 = w;
    if (which != DDMap::Psi) std::reverse(w2.begin(), w2.end());
    Frac factor = (which == DDMap::Star) ? mw : mw.bar();
    if (which != DDMap::Star) factor *= Frac(Laurent::v(-l));
    HallElt prod = hall_.word_product(w2);
    for (auto& [c2, coeff] : prod.c) out[c2] += factor * Frac(coeff);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

DDElt DoubleAlgebra::involution(const DDElt& x, DDMap which) {
  DDElt out;
  for (auto& [m, f] : x.c) {
    Frac cc = (which == DDMap::Star) ? f : f.bar();
    DDElt eelt, felt;
    for (auto& [cls, g] : side_map(m.ep, which)) eelt += e_class(cls) * g;
    for (auto& [cls, g] : side_map(m.fm, which)) felt += f_class(cls) * g;
    DDElt img;
    switch (which) {
      case DDMap::Bar:
        img = multiply(Kmono(m.mu, m.nu), multiply(eelt, felt));
        break;
      case DDMap::Psi:
        img = multiply(felt, multiply(eelt, Kmono(m.nu, m.mu)));
        break;
      case DDMap::Star:
        img = multiply(Kmono(m.nu, m.mu), multiply(eelt, felt));
        break;
    }
    out += img * cc;
  }
  return out;
}

std::pair<IntVec, IntVec> DoubleAlgebra::gamma_deg(const PBWMono& m) const {
  IntVec kk = vec_add(m.mu, m.nu);
  return {vec_add(hall_.class_dim(m.ep), kk), vec_add(hall_.class_dim(m.fm), kk)};
}

bool DoubleAlgebra::homogeneous(const DDElt& x, std::pair<IntVec, IntVec>* deg) const {
  bool first = true;
  std::pair<IntVec, IntVec> d;
  for (auto& [m, f] : x.c) {
    auto g = gamma_deg(m);
    if (first) {
      d = g;
      first = false;
    } else if (g != d) {
      return false;
    }
  }
  if (deg && !first) *deg = d;
  return true;
}

DDElt DoubleAlgebra::diamond(const IntVec& kmu, const IntVec& knu, const DDElt& x) {
  DDElt out;
  for (auto& [m, f] : x.c) {
    // alpha-check pairing of K^kmu K'^knu against deg_Gamma of the monomial
    long s = cpair(vec_sub(kmu, knu), vec_sub(hall_.class_dim(m.ep), hall_.class_dim(m.fm)));
    PBWMono m2 = m;
    m2.mu = vec_add(m2.mu, kmu);
    m2.nu = vec_add(m2.nu, knu);
    out.c[m2] += f * Frac(Laurent::u(static_cast<int>(s)));
  }
  out.trim();
  return out;
}

DDElt DoubleAlgebra::heisenberg_project(const DDElt& x, int sign) const {
  DDElt out;
  for (auto& [m, f] : x.c) {
    const IntVec& dropped = (sign > 0) ? m.nu : m.mu;
    if (std::all_of(dropped.begin(), dropped.end(), [](int k) { return k == 0; }))
      out.c[m] = f;
  }
  return out;
}

DDElt DoubleAlgebra::h_multiply(const DDElt& x, const DDElt& y, int sign) {
  return heisenberg_project(multiply(x, y), sign);
}

DDElt DoubleAlgebra::braid_image(int i, bool inverse, bool eside, int j) {
  Frac inv_vv = Frac(Laurent::one()) / Frac(Laurent::v(1) - Laurent::v(-1));
  if (j == i) {
    if (eside)
      return inverse ? multiply(chevF(i), Ki(i, -1)) * Frac(Laurent::v(1))
                     : multiply(Kpi(i, -1), chevF(i)) * Frac(Laurent::v(1));
    return inverse ? multiply(Kpi(i, -1), chevE(i)) * Frac(Laurent::v(-1))
                   : multiply(chevE(i), Ki(i, -1)) * Frac(Laurent::v(-1));
  }
  if (cartan_[i][j] == 0) return eside ? chevE(j) : chevF(j);
  if (cartan_[i][j] != -1) throw std::runtime_error("unsupported Cartan entry in braid table");
  DDElt gi = eside ? chevE(i) : chevF(i);
  DDElt gj = eside ? chevE(j) : chevF(j);
  DDElt first = inverse ? multiply(gj, gi) : multiply(gi, gj);
  DDElt second = inverse ? multiply(gi, gj) : multiply(gj, gi);
  return (first * Frac(Laurent::u(1)) - second * Frac(Laurent::u(-1))) * inv_vv;
}

DDElt DoubleAlgebra::braid_T(int i, const DDElt& x, bool inverse) {
  DDElt out;
  for (auto& [m, f] : x.c) {
    DDElt imgf = one(), imge = one();
    if (!m.fm.empty()) {
      DDElt acc;
      for (auto& [w, mw] : hall_.monomial_expression(m.fm)) {
        DDElt t = one();
        for (int letter : w) t = multiply(t, braid_image(i, inverse, false, letter));
        acc += t * (mw * Frac(Laurent::u(static_cast<int>(w.size()))));
      }
      imgf = acc;
    }
    if (!m.ep.empty()) {
      DDElt acc;
      for (auto& [w, mw] : hall_.monomial_expression(m.ep)) {
        DDElt t = one();
        for (int letter : w) t = multiply(t, braid_image(i, inverse, true, letter));
        acc += t * (mw * Frac(Laurent::u(static_cast<int>(w.size()))));
      }
      imge = acc;
    }
    DDElt imgk = Kmono(reflect(cartan_, i, m.mu), reflect(cartan_, i, m.nu));
    out += multiply(imgf, multiply(imge, imgk)) * f;
  }
  return out;
}

std::vector<std::pair<KSClass, std::map<KSClass, Frac>>> DoubleAlgebra::half_dual_family(
    const IntVec& d) {
  auto it = dual_memo_.find(d);
  if (it != dual_memo_.end()) return it->second;
  std::vector<std::pair<KSClass, std::map<KSClass, Frac>>> out;
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) {
    out.emplace_back(KSClass{}, std::map<KSClass, Frac>{{KSClass{}, Frac(Laurent::one())}});
    dual_memo_.emplace(d, out);
    return out;
  }
  BasisFamily f = dual_canonical_basis(hall_, d);
  auto inu = family_in_u(hall_, f, false);
  for (size_t l = 0; l < f.classes.size(); ++l) out.emplace_back(f.classes[l], inu[l]);
  dual_memo_.emplace(d, out);
  return out;
}

DoubleAlgebra::BGFamily DoubleAlgebra::bg_stage(const IntVec& gplus, const IntVec& gminus,
                                                bool stage2) {
  IntVec kcap(shape_.n, 0);
  for (int i = 0; i < shape_.n; ++i) kcap[i] = std::min(gplus[i], gminus[i]);
  std::vector<BGIndex> idx;
  std::vector<DDElt> standard;
  for (auto& ktot : boxed_vectors(kcap)) {
    IntVec dplus = vec_sub(gplus, ktot), dminus = vec_sub(gminus, ktot);
    if (!vec_nonneg(dplus) || !vec_nonneg(dminus)) continue;
    auto famp = half_dual_family(dplus);
    auto famm = half_dual_family(dminus);
    std::vector<std::pair<IntVec, IntVec>> splits;
    if (!stage2) {
      splits.emplace_back(ktot, zero_vec(shape_.n));
    } else {
      for (auto& mu : boxed_vectors(ktot)) splits.emplace_back(mu, vec_sub(ktot, mu));
    }
    // stage-2 standard elements sit over the stage-1 output of the piece
    BGFamily s1;
    if (stage2) s1 = bg_stage(dplus, dminus, false);
    for (auto& [mu, nu] : splits)
      for (auto& [clm, com] : famm)
        for (auto& [clp, cop] : famp) {
          DDElt core;
          if (!stage2) {
            DDElt bm, bp;
            for (auto& [cls, g] : com) bm += f_class(cls) * g;
            for (auto& [cls, g] : cop) bp += e_class(cls) * g;
            core = multiply(bm, bp);
          } else {
            bool found = false;
            for (size_t r = 0; r < s1.idx.size(); ++r)
              if (s1.idx[r].fm == clm && s1.idx[r].ep == clp &&
                  s1.idx[r].mu == zero_vec(shape_.n)) {
                core = s1.elts[r];
                found = true;
              }
            if (!found) throw std::runtime_error("stage-1 element missing");
          }
          idx.push_back(BGIndex{mu, nu, clm, clp});
          standard.push_back(diamond(mu, nu, core));
        }
  }
  int n = static_cast<int>(idx.size());
  // coordinate the standard family over the PBW monomials of the piece
  std::map<PBWMono, int> monos;
  for (auto& s : standard)
    for (auto& [m, f] : s.c) monos.emplace(m, 0);
  {
    int k = 0;
    for (auto& [m, slot] : monos) slot = k++;
  }
  auto coords = [&](const DDElt& x) {
    std::vector<Frac> v(monos.size());
    for (auto& [m, f] : x.c) {
      auto it2 = monos.find(m);
      if (it2 == monos.end()) throw std::runtime_error("element outside the family span");
      v[it2->second] = f;
    }
    return v;
  };
  // incremental elimination with tracked combinations
  struct Piv {
    size_t col;
    std::vector<Frac> row, combo;
  };
  std::vector<Piv> pivots;
  auto reduce = [&](std::vector<Frac> r, std::vector<Frac> combo, bool record) {
    for (auto& p : pivots) {
      if (r[p.col].is_zero()) continue;
      Frac f = r[p.col];
      for (size_t k = 0; k < r.size(); ++k) r[k] -= f * p.row[k];
      for (size_t k = 0; k < combo.size(); ++k) combo[k] -= f * p.combo[k];
    }
    if (record) {
      size_t col = r.size();
      for (size_t k = 0; k < r.size(); ++k)
        if (!r[k].is_zero()) {
          col = k;
          break;
        }
      if (col == r.size()) throw std::runtime_error("standard family is dependent");
      Frac lead = r[col];
      for (auto& x : r) x = x / lead;
      for (auto& x : combo) x = x / lead;
      pivots.push_back(Piv{col, std::move(r), std::move(combo)});
      return std::vector<Frac>{};
    }
    for (auto& x : r)
      if (!x.is_zero()) throw std::runtime_error("element outside the family span");
    return combo;
  };
  for (int l = 0; l < n; ++l) {
    std::vector<Frac> combo(n);
    combo[l] = Frac(Rational(-1));
    reduce(coords(standard[l]), std::move(combo), true);
  }
  TriangularProblem p;
  p.n = n;
  p.positive_ring = !stage2;
  p.prec.assign(n, std::vector<char>(n, 0));
  auto key = [&](const BGIndex& b) { return stage2 ? b.nu : b.mu; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (key(idx[a]) != key(idx[b]) && vec_leq(key(idx[b]), key(idx[a]))) p.prec[a][b] = 1;
  p.bar_mat.assign(n, std::vector<Laurent>(n));
  for (int l = 0; l < n; ++l) {
    DDElt bl = involution(standard[l], DDMap::Bar);
    if (stage2 == false) bl = heisenberg_project(bl, +1);
    auto expr = reduce(coords(bl), std::vector<Frac>(n), false);
    for (int m = 0; m < n; ++m)
      p.bar_mat[l][m] = expr[m].to_laurent_or_throw("bar matrix entry is not Laurent");
  }
  auto trans = lusztig_basis(p);
  BGFamily fam;
  fam.idx = idx;
  fam.elts.resize(n);
  for (int l = 0; l < n; ++l) {
    DDElt e;
    for (int m = 0; m < n; ++m)
      if (!trans[l][m].is_zero()) e += standard[m] * Frac(trans[l][m]);
    fam.elts[l] = std::move(e);
  }
  return fam;
}

DoubleAlgebra::BGFamily DoubleAlgebra::bg_stage1(const IntVec& gplus, const IntVec& gminus) {
  return bg_stage(gplus, gminus, false);
}

DoubleAlgebra::BGFamily DoubleAlgebra::bg_double_basis(const IntVec& gplus,
                                                       const IntVec& gminus) {
  return bg_stage(gplus, gminus, true);
}

std::string DoubleAlgebra::str(const DDElt& x) {
  if (x.is_zero()) return "0";
  const IndecTable& t = hall_.table(2);
  std::ostringstream os;
  bool first = true;
  for (auto& [m, f] : x.c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")";
    if (!m.fm.empty()) os << " F[" << t.class_str(m.fm) << "]";
    if (!m.ep.empty()) os << " E[" << t.class_str(m.ep) << "]";
    auto kstr = [&](const char* name, const IntVec& e) {
      for (int i = 0; i < shape_.n; ++i)
        if (e[i] != 0) os << " " << name << shape_.names[i] << "^" << e[i];
    };
    kstr("K", m.mu);
    kstr("K'", m.nu);
  }
  return os.str();
}

}  // namespace qhall
