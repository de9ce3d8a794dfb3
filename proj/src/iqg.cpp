#include "qhall/iqg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {

Frac vpow(long e) { return Frac(Laurent::u(static_cast<int>(2 * e))); }

IntVec vec_add(const IntVec& a, const IntVec& b) {
  IntVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

void IQGElt::trim() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

IQG::IQG(Quiver shape)
    : shape_(std::move(shape)), cartan_(cartan_matrix(shape_)), dd_(shape_) {
  if (static_cast<int>(shape_.rho.size()) != shape_.n)
    throw std::invalid_argument("involution invalid");
  for (int i = 0; i < shape_.n; ++i) {
    int ri = shape_.rho[i];
    if (ri < 0 || ri >= shape_.n || shape_.rho[ri] != i)
      throw std::invalid_argument("involution invalid");
    for (int j = 0; j < shape_.n; ++j)
      if (cartan_[shape_.rho[i]][shape_.rho[j]] != cartan_[i][j])
        throw std::invalid_argument("involution invalid");
  }
  for (int i = 0; i < shape_.n; ++i)
    bval_.push_back(dd_.chevF(i) +
                    dd_.multiply(dd_.chevE(shape_.rho[i]), dd_.Kpi(i)));
}

long IQG::kmove(const IntVec& a, const Word& w) const {
  long e = 0;
  for (int l : w)
    for (int m = 0; m < shape_.n; ++m)
      e += static_cast<long>(a[m]) * (cartan_[m][l] - cartan_[shape_.rho[m]][l]);
  return e;
}

IQGElt IQG::one() {
  IQGElt r;
  r.terms[{IntVec(shape_.n, 0), Word{}}] = Frac(Laurent::one());
  r.value = dd_.one();
  return r;
}

IQGElt IQG::B(int i) {
  IQGElt r;
  r.terms[{IntVec(shape_.n, 0), Word{i}}] = Frac(Laurent::one());
  r.value = bval_[i];
  return r;
}

IQGElt IQG::ktilde(const IntVec& a) {
  IQGElt r;
  r.terms[{a, Word{}}] = Frac(Laurent::one());
  IntVec ra(shape_.n, 0);
  for (int i = 0; i < shape_.n; ++i) ra[shape_.rho[i]] = a[i];
  r.value = dd_.Kmono(a, ra);
  return r;
}

IQGElt IQG::kgen(int i, int e) {
  IntVec a(shape_.n, 0);
  a[i] = e;
  return ktilde(a);
}

IQGElt IQG::Kcal(int i, int e) {
  IQGElt r = kgen(i, e);
  if (split(i)) r = scale(r, vpow(e));
  return r;
}

IQGElt IQG::add(const IQGElt& x, const IQGElt& y) {
  IQGElt r = x;
  for (auto& [t, f] : y.terms) r.terms[t] += f;
  r.value = x.value + y.value;
  r.trim();
  return r;
}

IQGElt IQG::sub(const IQGElt& x, const IQGElt& y) {
  IQGElt r = x;
  for (auto& [t, f] : y.terms) r.terms[t] -= f;
  r.value = x.value - y.value;
  r.trim();
  return r;
}

IQGElt IQG::scale(const IQGElt& x, const Frac& f) {
  IQGElt r;
  for (auto& [t, g] : x.terms) r.terms[t] = g * f;
  r.value = x.value * f;
  r.trim();
  return r;
}

IQGElt IQG::multiply(const IQGElt& x, const IQGElt& y) {
  IQGElt r;
  for (auto& [tx, f] : x.terms)
    for (auto& [ty, g] : y.terms) {
      Word w = tx.second;
      w.insert(w.end(), ty.second.begin(), ty.second.end());
      r.terms[{vec_add(tx.first, ty.first), w}] +=
          f * g * vpow(kmove(ty.first, tx.second));
    }
  r.value = dd_.multiply(x.value, y.value);
  r.trim();
  return r;
}

IQGElt IQG::power(const IQGElt& x, int m) {
  IQGElt r = one();
  for (int k = 0; k < m; ++k) r = multiply(r, x);
  return r;
}

IQGElt IQG::vbracket(const IQGElt& x, const IQGElt& y) {
  return sub(multiply(x, y), scale(multiply(y, x), vpow(1)));
}

DDElt IQG::term_value(const IntVec& a, const Word& w) {
  auto key = std::make_pair(a, w);
  auto it = tv_memo_.find(key);
  if (it != tv_memo_.end()) return it->second;
  DDElt v;
  if (w.empty()) {
    v = ktilde(a).value;
  } else {
    Word head(w.begin(), std::prev(w.end()));
    v = dd_.multiply(term_value(a, head), bval_[w.back()]);
  }
  tv_memo_.emplace(key, v);
  return v;
}

void IQG::certify(const IQGElt& x) {
  DDElt acc;
  for (auto& [t, f] : x.terms) acc += term_value(t.first, t.second) * f;
  if (!(acc == x.value))
    throw std::runtime_error("generator expression does not re-derive the element");
}

IQGElt IQG::ibar(const IQGElt& x) {
  IQGElt r;
  for (auto& [t, f] : x.terms) {
    const IntVec& a = t.first;
    Word w = t.second;
    std::reverse(w.begin(), w.end());
    long e = kmove(a, w);
    for (int i = 0; i < shape_.n; ++i)
      if (split(i)) e += 2 * a[i];
    r.terms[{a, w}] += f.bar() * vpow(e);
  }
  r.trim();
  for (auto& [t, f] : r.terms) r.value += term_value(t.first, t.second) * f;
  return r;
}

IQGElt IQG::braid_gen_image(int i, int j) {
  auto key = std::make_pair(i, j);
  auto it = braid_memo_.find(key);
  if (it != braid_memo_.end()) return it->second;
  int ri = shape_.rho[i];
  Frac inv_vv = Frac(Laurent::one()) / Frac(Laurent::v(1) - Laurent::v(-1));
  IQGElt img;
  if (split(i)) {
    if (j == i) {
      img = multiply(Kcal(i, -1), B(i));
    } else if (cartan_[i][j] == 0) {
      img = B(j);
    } else if (cartan_[i][j] == -1) {
      img = scale(sub(scale(multiply(B(i), B(j)), Frac(Laurent::u(1))),
                      scale(multiply(B(j), B(i)), Frac(Laurent::u(-1)))),
                  inv_vv);
    } else {
      throw std::runtime_error("unsupported Cartan entry in ibraid table");
    }
  } else {
    if (cartan_[i][ri] != 0)
      throw std::runtime_error("ibraid needs c(i, rho i) = 0 at non-split i");
    if (j == i) {
      img = scale(multiply(Kcal(i, -1), B(ri)), vpow(1));
    } else if (j == ri) {
      img = scale(multiply(Kcal(ri, -1), B(i)), vpow(1));
    } else if (cartan_[i][j] == -1 && cartan_[ri][j] == -1) {
      img = add(scale(vbracket(vbracket(B(j), B(i)), B(ri)),
                      vpow(-1) * inv_vv * inv_vv),
                multiply(B(j), Kcal(i)));
    } else if (cartan_[i][j] == -1) {
      img = scale(sub(scale(multiply(B(i), B(j)), Frac(Laurent::u(1))),
                      scale(multiply(B(j), B(i)), Frac(Laurent::u(-1)))),
                  inv_vv);
    } else if (cartan_[ri][j] == -1) {
      img = scale(sub(scale(multiply(B(ri), B(j)), Frac(Laurent::u(1))),
                      scale(multiply(B(j), B(ri)), Frac(Laurent::u(-1)))),
                  inv_vv);
    } else {
      img = B(j);
    }
  }
  return braid_memo_.emplace(key, std::move(img)).first->second;
}

IQGElt IQG::braid_k_image(int i, const IntVec& a) {
  IntVec sa = apply_word(cartan_, restricted_generator(shape_, i), a);
  long e = 0;
  for (int j = 0; j < shape_.n; ++j)
    if (split(j)) e += sa[j] - a[j];
  return scale(ktilde(sa), vpow(e));
}

IQGElt IQG::ibraid(int i, const IQGElt& x) {
  if (shape_.rho[i] < i)
    throw std::invalid_argument("not an orbit representative");
  DDElt val;
  for (auto& [t, f] : x.terms) {
    DDElt img = braid_k_image(i, t.first).value;
    for (int l : t.second) img = dd_.multiply(img, braid_gen_image(i, l).value);
    val += img * f;
  }
  val.trim();
  IQGElt out = from_value(val);
  certify(out);
  return out;
}

IQGElt IQG::from_value(const DDElt& val) {
  // Leading monomials of ktilde^a B_{w_1}...B_{w_k} carry mu = a and letter
  // content fm + rho(ep) on dimension vectors; straightening corrections
  // strictly drop the content.  Peel blocks of maximal content: match the
  // block against leading parts of words with that content, subtract the
  // full term values, and recurse on the remainder.
  auto mono_key = [&](const PBWMono& m) {
    IntVec content = dd_.hall().class_dim(m.fm);
    IntVec ed = dd_.hall().class_dim(m.ep);
    for (int l = 0; l < shape_.n; ++l) content[l] += ed[shape_.rho[l]];
    return std::make_pair(m.mu, content);
  };
  IQGElt out;
  out.value = val;
  DDElt res = val;
  res.trim();
  while (!res.is_zero()) {
    std::map<std::pair<IntVec, IntVec>, DDElt> blocks;
    for (auto& [m, f] : res.c) blocks[mono_key(m)].c[m] += f;
    auto best = blocks.begin();
    long bestsz = -1;
    for (auto it = blocks.begin(); it != blocks.end(); ++it) {
      long sz = 0;
      for (int x : it->first.second) sz += x;
      if (sz > bestsz) {
        bestsz = sz;
        best = it;
      }
    }
    const IntVec a = best->first.first;
    const auto key = best->first;
    const DDElt piece = best->second;
    Word base;
    for (int l = 0; l < shape_.n; ++l)
      base.insert(base.end(), key.second[l], l);
    std::vector<Word> words;
    do {
      words.push_back(base);
      if (words.size() > 20000)
        throw std::runtime_error("expression search too large");
    } while (std::next_permutation(base.begin(), base.end()));
    std::vector<DDElt> cand;
    for (auto& w : words) cand.push_back(term_value(a, w));
    // rows: block monomials of the candidates and of the piece
    std::map<PBWMono, size_t> rows;
    for (auto& tv : cand)
      for (auto& [m, f] : tv.c)
        if (mono_key(m) == key) rows.emplace(m, rows.size());
    for (auto& [m, f] : piece.c) rows.emplace(m, rows.size());
    size_t R = rows.size(), C = words.size();
    std::vector<std::vector<Frac>> A(R, std::vector<Frac>(C));
    std::vector<Frac> b(R);
    for (size_t cI = 0; cI < C; ++cI)
      for (auto& [m, f] : cand[cI].c)
        if (mono_key(m) == key) A[rows.at(m)][cI] = f;
    for (auto& [m, f] : piece.c) b[rows.at(m)] = f;
    std::vector<size_t> pcol;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
      size_t pr = r;
      while (pr < R && A[pr][c].is_zero()) ++pr;
      if (pr == R) continue;
      std::swap(A[pr], A[r]);
      std::swap(b[pr], b[r]);
      Frac inv = Frac(Laurent::one()) / A[r][c];
      for (size_t q = c; q < C; ++q) A[r][q] = A[r][q] * inv;
      b[r] = b[r] * inv;
      for (size_t p = 0; p < R; ++p) {
        if (p == r || A[p][c].is_zero()) continue;
        Frac f = A[p][c];
        for (size_t q = c; q < C; ++q) A[p][q] -= f * A[r][q];
        b[p] -= f * b[r];
      }
      pcol.push_back(c);
      ++r;
    }
    for (size_t p = r; p < R; ++p)
      if (!b[p].is_zero())
        throw std::runtime_error("element is not in the subalgebra");
    for (size_t p = 0; p < r; ++p)
      if (!b[p].is_zero()) {
        out.terms[{a, words[pcol[p]]}] += b[p];
        res -= cand[pcol[p]] * b[p];
      }
    res.trim();
  }
  out.trim();
  return out;
}

void IQG::verify_presentation() {
  Frac d = Frac(Laurent::v(-1) - Laurent::v(1));
  auto expect_zero = [&](const IQGElt& x, const std::string& what) {
    if (!x.value.is_zero()) {
      std::ostringstream os;
      os << "relation failed: " << what << " = " << dd_.str(x.value);
      throw std::runtime_error(os.str());
    }
  };
  for (int l = 0; l < shape_.n; ++l)
    for (int i = 0; i < shape_.n; ++i) {
      long e = cartan_[shape_.rho[l]][i] - cartan_[l][i];
      IQGElt rel = sub(multiply(kgen(l), B(i)), scale(multiply(B(i), kgen(l)), vpow(e)));
      std::ostringstream os;
      os << "k" << l << " B" << i << " commutation";
      expect_zero(rel, os.str());
    }
  for (int i = 0; i < shape_.n; ++i)
    for (int j = 0; j < shape_.n; ++j) {
      if (i == j) continue;
      std::ostringstream os;
      IQGElt lhs;
      if (j == shape_.rho[i] && !split(i)) {
        lhs = sub(sub(multiply(B(j), B(i)), multiply(B(i), B(j))),
                  scale(sub(kgen(i), kgen(j)), d));
        os << "B" << j << " B" << i << " - B" << i << " B" << j
           << " - (v^-1 - v)(k" << i << " - k" << j << ")";
      } else if (cartan_[i][j] == 0) {
        lhs = sub(multiply(B(i), B(j)), multiply(B(j), B(i)));
        os << "[B" << i << ", B" << j << "]";
      } else if (cartan_[i][j] == -1) {
        IQGElt serre = add(multiply(power(B(i), 2), B(j)),
                           multiply(B(j), power(B(i), 2)));
        serre = sub(serre, scale(multiply(B(i), multiply(B(j), B(i))), Frac(qint(2))));
        if (split(i)) {
          // B_i^2 B_j - [2] B_i B_j B_i + B_j B_i^2 = -v(v - v^-1)^2 k_i B_j
          Frac rhs = Frac(Laurent::v(1) * (Laurent::v(1) - Laurent::v(-1)) *
                          (Laurent::v(1) - Laurent::v(-1)));
          lhs = add(serre, scale(multiply(kgen(i), B(j)), rhs));
          os << "modified Serre at (" << i << ", " << j << ")";
        } else {
          lhs = serre;
          os << "Serre at (" << i << ", " << j << ")";
        }
      } else {
        continue;
      }
      expect_zero(lhs, os.str());
    }
}

std::string IQG::str(const IQGElt& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [t, f] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f.str() << ")";
    for (int i = 0; i < shape_.n; ++i)
      if (t.first[i] != 0) os << " k" << shape_.names[i] << "^" << t.first[i];
    for (int l : t.second) os << " B" << shape_.names[l];
  }
  return os.str();
}

}  // namespace qhall
