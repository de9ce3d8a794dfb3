#include "qhall/nks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {

int sign_of(const IntVec& d) {
  for (int x : d)
    if (x != 0) return x > 0 ? 1 : -1;
  return 0;
}

IntVec abs_vec(const IntVec& d) {
  IntVec r = d;
  for (int& x : r) x = std::abs(x);
  return r;
}

IntVec rho_vec(const Quiver& q, const IntVec& d) {
  IntVec r(d.size(), 0);
  for (size_t l = 0; l < d.size(); ++l) r[q.rho[l]] = d[l];
  return r;
}

int parity(int s) { return ((s % 2) + 2) % 2; }

}  // namespace

NKS::NKS(Quiver shape, bool itype)
    : shape_(std::move(shape)), itype_(itype), table_(build_indecomposables(shape_, 3)) {
  int n = shape_.n;
  if (itype_) {
    if (static_cast<int>(shape_.rho.size()) != n || !shape_.rho_preserves_arrows())
      throw std::invalid_argument("involution invalid");
    for (int i = 0; i < n; ++i) {
      int ri = shape_.rho[i];
      if (ri < 0 || ri >= n || shape_.rho[ri] != i)
        throw std::invalid_argument("involution invalid");
    }
  }
  // projective and injective dimension vectors from path reachability
  std::vector<IntVec> pdim(n, IntVec(n, 0)), idim(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {i};
    seen[i] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      pdim[i][x] = 1;
      for (auto& [s, t] : shape_.arrows)
        if (s == x && !seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
    }
    std::fill(seen.begin(), seen.end(), 0);
    stack = {i};
    seen[i] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      idim[i][x] = 1;
      for (auto& [s, t] : shape_.arrows)
        if (t == x && !seen[s]) {
          seen[s] = 1;
          stack.push_back(s);
        }
    }
  }
  // column offsets: the projective at the arrow source sits one step left
  IntVec q(n, 1 << 20);
  q[0] = 0;
  for (int pass = 0; pass < n; ++pass)
    for (auto& [s, t] : shape_.arrows) {
      if (q[s] != (1 << 20) && q[t] == (1 << 20)) q[t] = q[s] - 1;
      if (q[t] != (1 << 20) && q[s] == (1 << 20)) q[s] = q[t] + 1;
    }
  int qmin = *std::min_element(q.begin(), q.end());
  for (int& x : q) x -= qmin;
  int qmax = *std::max_element(q.begin(), q.end());
  int N = 2 * static_cast<int>(table_.roots.size()) + 8;
  int pmax = qmax + N;
  // knit the window: signed dimension vectors with shift tracking
  std::vector<std::map<int, std::pair<IntVec, int>>> col(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return q[a] > q[b]; });
  for (int p = 0; p <= pmax; ++p)
    for (int i : order) {
      if (p < q[i]) continue;
      if (p == q[i]) {
        col[i][p] = {pdim[i], 0};
        continue;
      }
      IntVec d(n, 0);
      for (auto& [s, t] : shape_.arrows) {
        const IntVec* src = nullptr;
        if (t == i) src = &col[s].at(p).first;
        else if (s == i) src = &col[t].at(p - 1).first;
        else continue;
        for (int l = 0; l < n; ++l) d[l] += (*src)[l];
      }
      auto& prev = col[i].at(p - 1);
      for (int l = 0; l < n; ++l) d[l] -= prev.first[l];
      int sh = prev.second;
      if (sign_of(d) != sign_of(prev.first)) {
        sh += 1;
        // crossing rule: the step after an injective is the matching
        // projective, shifted once
        IntVec pi = abs_vec(prev.first), cu = abs_vec(d);
        int j = -1;
        for (int l = 0; l < n; ++l)
          if (pi == idim[l]) j = l;
        if (j < 0 || cu != pdim[j])
          throw std::runtime_error("knitting boundary rule violated");
      }
      if (table_.root_index(abs_vec(d)) < 0)
        throw std::runtime_error("knitting produced a non-root label");
      col[i][p] = {d, sh};
    }
  // quotient vertices in stable order
  auto key_of = [&](const IntVec& d, int sh) { return orbit_key(d, sh); };
  int nroots = static_cast<int>(table_.roots.size());
  for (int ri = 0; ri < nroots; ++ri)
    for (int par = 0; par < (itype_ ? 1 : 2); ++par) {
      vid_[{ri, par}] = static_cast<int>(labels_.size());
      labels_.push_back(NKSLabel{table_.roots[ri], par});
    }
  int nv = static_cast<int>(labels_.size());
  tau_.assign(nv, -1);
  arrows_in_.assign(nv, {});
  std::vector<char> have_arrows(nv, 0);
  for (int i = 0; i < n; ++i)
    for (auto& [p, lab] : col[i]) {
      if (p == q[i]) continue;
      int x = vid_.at(key_of(lab.first, lab.second));
      auto& prev = col[i].at(p - 1);
      int tx = vid_.at(key_of(prev.first, prev.second));
      if (tau_[x] >= 0 && tau_[x] != tx)
        throw std::runtime_error("quotient translation is inconsistent");
      tau_[x] = tx;
      std::vector<int> in;
      for (auto& [s, t] : shape_.arrows) {
        if (t == i) {
          auto& l2 = col[s].at(p);
          in.push_back(vid_.at(key_of(l2.first, l2.second)));
        } else if (s == i) {
          auto& l2 = col[t].at(p - 1);
          in.push_back(vid_.at(key_of(l2.first, l2.second)));
        }
      }
      std::sort(in.begin(), in.end());
      if (have_arrows[x] && arrows_in_[x] != in)
        throw std::runtime_error("quotient arrows are inconsistent");
      arrows_in_[x] = std::move(in);
      have_arrows[x] = 1;
    }
  for (int x = 0; x < nv; ++x)
    if (tau_[x] < 0 || !have_arrows[x])
      throw std::runtime_error("window too small");
  // frozen copies at the simple labels
  for (int i = 0; i < n; ++i)
    for (int par = 0; par < (itype_ ? 1 : 2); ++par) {
      IntVec e(n, 0);
      e[i] = 1;
      int c = vid_.at({table_.root_index(e), par});
      frozen_id_[c] = static_cast<int>(frozen_c_.size());
      frozen_c_.push_back(c);
    }
}

std::pair<int, int> NKS::orbit_key(const IntVec& signed_dim, int shift) const {
  IntVec r = abs_vec(signed_dim);
  if (itype_) {
    if (parity(shift) == 1) r = rho_vec(shape_, r);
    return {table_.root_index(r), 0};
  }
  return {table_.root_index(r), parity(shift)};
}

int NKS::vertex_of(const IntVec& root, int shift) const {
  int ri = table_.root_index(root);
  if (ri < 0) throw std::invalid_argument("not an indecomposable label");
  IntVec d = root;
  auto it = vid_.find(orbit_key(d, shift));
  if (it == vid_.end()) throw std::invalid_argument("not an indecomposable label");
  return it->second;
}

int NKS::frozen_of(int i, int shift) const {
  if (itype_) {
    int j = parity(shift) == 1 ? shape_.rho[i] : i;
    return j;
  }
  return 2 * i + parity(shift);
}

IntVec NKS::quantum_cartan(const IntVec& v) const {
  IntVec r(labels_.size(), 0);
  for (size_t x = 0; x < labels_.size(); ++x) {
    long s = static_cast<long>(v[x]) + v[tau_[x]];
    for (int y : arrows_in_[x]) s -= v[y];
    r[x] = static_cast<int>(s);
  }
  return r;
}

IntVec NKS::sigma_star(const IntVec& w) const {
  IntVec r(labels_.size(), 0);
  for (size_t f = 0; f < frozen_c_.size(); ++f) r[frozen_c_[f]] += w[f];
  return r;
}

bool NKS::l_dominant(const IntVec& v, const IntVec& w) const {
  IntVec s = sigma_star(w), c = quantum_cartan(v);
  for (size_t x = 0; x < labels_.size(); ++x)
    if (s[x] - c[x] < 0) return false;
  return true;
}

std::vector<IntVec> NKS::enumerate_l_dominant(const IntVec& w, int cap) const {
  long wt = 0;
  for (int x : w) wt += x;
  if (cap <= 0) cap = static_cast<int>(wt) * static_cast<int>(labels_.size()) + 2;
  std::vector<IntVec> out;
  IntVec v(labels_.size(), 0);
  bool at_cap = false;
  std::function<void(size_t, int)> rec = [&](size_t x, int used) {
    if (x == labels_.size()) {
      if (l_dominant(v, w)) {
        out.push_back(v);
        if (used >= cap) at_cap = true;
      }
      return;
    }
    for (int k = 0; used + k <= cap; ++k) {
      v[x] = k;
      rec(x + 1, used + k);
    }
    v[x] = 0;
  };
  rec(0, 0);
  if (at_cap) throw std::runtime_error("enumeration cap reached");
  return out;
}

std::pair<IntVec, IntVec> NKS::generator_vectors(int i) const {
  IntVec w(frozen_c_.size(), 0);
  if (itype_) {
    w[frozen_of(i)] += 1;
    w[frozen_of(shape_.rho[i])] += 1;
  } else {
    w[frozen_of(i, 0)] += 1;
    w[frozen_of(i, 1)] += 1;
  }
  IntVec e(shape_.n, 0);
  e[i] = 1;
  int si = table_.root_index(e);
  IntVec v(labels_.size(), 0);
  for (size_t x = 0; x < labels_.size(); ++x) {
    int ri = table_.root_index(labels_[x].root);
    if (itype_) {
      int pri = table_.root_index(rho_vec(shape_, labels_[x].root));
      v[x] = table_.hom[si][ri] +
             static_cast<int>(ext_dim(shape_, table_.p, table_.reps[si], table_.reps[pri]));
    } else if (labels_[x].shift == 0) {
      v[x] = table_.hom[si][ri];
    } else {
      v[x] = static_cast<int>(ext_dim(shape_, table_.p, table_.reps[si], table_.reps[ri]));
    }
  }
  return {v, w};
}

std::pair<IntVec, IntVec> NKS::dict(const KSClass& lambda) const {
  IntVec t(labels_.size(), 0);
  for (auto& [ri, m] : lambda) t[vid_.at({ri, 0})] += m;
  auto try_v = [&](const IntVec& v) -> std::pair<bool, IntVec> {
    IntVec c = quantum_cartan(v);
    IntVec w(frozen_c_.size(), 0);
    IntVec need = t;
    for (size_t x = 0; x < labels_.size(); ++x) need[x] += c[x];
    for (size_t x = 0; x < labels_.size(); ++x) {
      if (need[x] == 0) continue;
      auto it = frozen_id_.find(static_cast<int>(x));
      if (it == frozen_id_.end() || need[x] < 0) return {false, {}};
      w[it->second] += need[x];
    }
    return {true, w};
  };
  // minimal total v, preferring v = 0
  for (int total = 0; total <= 8; ++total) {
    IntVec v(labels_.size(), 0);
    std::function<std::pair<bool, IntVec>(size_t, int)> rec =
        [&](size_t x, int left) -> std::pair<bool, IntVec> {
      if (x == labels_.size()) {
        if (left != 0) return {false, {}};
        return try_v(v);
      }
      for (int k = left; k >= 0; --k) {
        v[x] = k;
        auto r = rec(x + 1, left - k);
        if (r.first) return r;
      }
      v[x] = 0;
      return {false, {}};
    };
    auto r = rec(0, total);
    if (r.first) return {v, r.second};
  }
  throw std::runtime_error("no dictionary pair found");
}

std::string NKS::dot() const {
  std::ostringstream os;
  os << "digraph nks {\n  rankdir=LR;\n";
  for (size_t x = 0; x < labels_.size(); ++x) {
    os << "  v" << x << " [label=\"" << dimvec_str(labels_[x].root);
    if (labels_[x].shift) os << "[" << labels_[x].shift << "]";
    os << "\"];\n";
  }
  for (size_t f = 0; f < frozen_c_.size(); ++f)
    os << "  f" << f << " [shape=box,label=\"s" << f << "\"];\n";
  for (size_t x = 0; x < labels_.size(); ++x)
    for (int y : arrows_in_[x]) os << "  v" << y << " -> v" << x << ";\n";
  for (size_t f = 0; f < frozen_c_.size(); ++f) {
    os << "  f" << f << " -> v" << frozen_c_[f] << ";\n";
    os << "  v" << tau_[frozen_c_[f]] << " -> f" << f << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::map<std::pair<int, int>, Frac> rank1_EaFb(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  int c = std::max(a, b), d = std::min(a, b);
  std::map<std::pair<int, int>, Frac> out;
  for (int v1 = 0; v1 <= d; ++v1)
    for (int v2 = 0; v1 + v2 <= d; ++v2) {
      Frac f = Frac(Laurent::v(c * (v2 - v1)) * qbinom(d + 1, v1) * qbinom(d + 1, v2) *
                    qint(d + 1 - v1 - v2)) /
               Frac(qint(d + 1));
      f.to_laurent_or_throw("rank-1 coefficient is not Laurent");
      if (!f.is_zero()) out[{v1, v2}] = f;
    }
  return out;
}

DDElt rank1_L(DoubleAlgebra& dd, int v1, int v2, int w1, int w2) {
  int n = std::min(w1, w2), l = v1 + v2;
  if (v1 < 0 || v2 < 0 || w1 < 0 || w2 < 0 || l > n)
    throw std::invalid_argument("not l-dominant");
  DDElt out;
  for (int k = l; k <= n; ++k)
    for (int p1 = v1; p1 <= k - v2; ++p1) {
      int p2 = k - p1;
      if (n - p2 - v1 < 0 || p1 - v1 > n - p2 - v1) continue;
      if (n - p1 - v2 < 0 || p2 - v2 > n - p1 - v2) continue;
      int f = (w1 - w2) * (v1 - v2) +
              (w2 + std::max(w2 - w1, 0) + 1 - p1 - p2) * ((v1 - v2) - (p1 - p2));
      Laurent coeff = Laurent::v(f) * qbinom(n - p2 - v1, p1 - v1) * qbinom(n - p1 - v2, p2 - v2);
      if ((k - l) % 2) coeff = -coeff;
      DDElt term = dd.multiply(dd.power(dd.chevE(0), w1 - k), dd.power(dd.chevF(0), w2 - k));
      term = dd.multiply(term, dd.Kmono(IntVec{p1}, IntVec{p2}));
      out += term * Frac(coeff);
    }
  out.trim();
  return out;
}

std::map<std::pair<int, int>, BigInt> irank1_L(int k, int m) {
  if (k < 0 || m < 0 || 2 * k > m) throw std::invalid_argument("out of range");
  std::map<std::pair<int, int>, BigInt> out;
  for (int j = k; 2 * j <= m; ++j) {
    BigInt c = binom(m - k - j, m - 2 * j);
    if ((j - k) % 2) c = -c;
    if (c != 0) out[{m - 2 * j, j}] += c;
  }
  return out;
}

std::map<std::pair<int, int>, BigInt> irank1_inverse(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("out of range");
  std::map<std::pair<int, int>, BigInt> out;
  if (a == 0) {
    out[{b, 2 * b}] = 1;
    return out;
  }
  for (int i = 0; 2 * i <= a; ++i) {
    BigInt c = binom(a - 1, i);
    if (i >= 2) c -= binom(a - 1, i - 2);
    if (c != 0) out[{i + b, a + 2 * b}] = c;
  }
  return out;
}

}  // namespace qhall
