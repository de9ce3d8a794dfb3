#include "qhall/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhall {

namespace {

std::vector<std::vector<char>> transitive_closure(std::vector<std::vector<char>> r) {
  int n = static_cast<int>(r.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (r[i][k])
        for (int j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  return r;
}

// linear extension: minimal elements first; tie-break by pref order
std::vector<int> linear_extension(const std::vector<std::vector<char>>& prec,
                                  const std::vector<int>& pref) {
  int n = static_cast<int>(prec.size());
  std::vector<int> indeg(n, 0), out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (prec[a][b]) ++indeg[b];
  std::vector<char> used(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i : pref)
      if (!used[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) throw std::runtime_error("invalid bar data");  // order has a cycle
    used[pick] = 1;
    out.push_back(pick);
    for (int b = 0; b < n; ++b)
      if (prec[pick][b]) --indeg[b];
  }
  return out;
}

std::vector<Laurent> solve_row(const TriangularProblem& p,
                               const std::vector<std::vector<char>>& prec,
                               const std::vector<int>& ext, int l) {
  int n = p.n;
  std::vector<Laurent> c(n);
  c[l] = Laurent::one();
  // process indices strictly below l in reverse linear-extension order
  for (auto it = ext.rbegin(); it != ext.rend(); ++it) {
    int m = *it;
    if (m == l || !prec[m][l]) continue;
    Laurent r;
    for (int nu = 0; nu < n; ++nu) {
      if (nu == m || c[nu].is_zero() || p.bar_mat[nu][m].is_zero()) continue;
      r += c[nu].bar() * p.bar_mat[nu][m];
    }
    if (r.is_zero()) continue;
    if (r.bar() != -r) throw std::runtime_error("invalid bar data");
    // unique solution of c - bar(c) = r with c in the chosen ring
    Laurent sol = p.positive_ring ? r.filter([](int e) { return e > 0; })
                                  : r.filter([](int e) { return e < 0; });
    if (!(p.positive_ring ? sol.in_vplus_ring() : sol.in_vminus_ring()))
      throw std::runtime_error("ring mismatch");
    if (sol - sol.bar() != r) throw std::runtime_error("ring mismatch");
    c[m] = sol;
  }
  return c;
}

}  // namespace

std::vector<std::vector<Laurent>> lusztig_basis(const TriangularProblem& p) {
  int n = p.n;
  if (static_cast<int>(p.prec.size()) != n || static_cast<int>(p.bar_mat.size()) != n)
    throw std::invalid_argument("triangular problem shape mismatch");
  auto prec = transitive_closure(p.prec);
  for (int i = 0; i < n; ++i)
    if (prec[i][i]) throw std::runtime_error("invalid bar data");
  // unitriangularity of the bar matrix
  for (int l = 0; l < n; ++l) {
    if (!p.bar_mat[l][l].is_one()) throw std::runtime_error("invalid bar data");
    for (int m = 0; m < n; ++m)
      if (m != l && !p.bar_mat[l][m].is_zero() && !prec[m][l])
        throw std::runtime_error("invalid bar data");
  }
  // involutivity: sum_m bar(B[l][m]) B[m][k] = delta_{lk}
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k) {
      Laurent s;
      for (int m = 0; m < n; ++m) {
        if (p.bar_mat[l][m].is_zero()) continue;
        s += p.bar_mat[l][m].bar() * p.bar_mat[m][k];
      }
      if (s != (l == k ? Laurent::one() : Laurent::zero()))
        throw std::runtime_error("invalid bar data");
    }

  std::vector<int> fwd(n), rev(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = i;
    rev[i] = n - 1 - i;
  }
  auto ext1 = linear_extension(prec, fwd);
  auto ext2 = linear_extension(prec, rev);
  std::vector<std::vector<Laurent>> out;
  for (int l = 0; l < n; ++l) {
    auto row = solve_row(p, prec, ext1, l);
    if (ext2 != ext1 && solve_row(p, prec, ext2, l) != row)
      throw std::logic_error("triangular basis depends on the linear extension");
    // bar invariance of the result
    for (int k = 0; k < n; ++k) {
      Laurent s;
      for (int m = 0; m < n; ++m) {
        if (row[m].is_zero() || p.bar_mat[m][k].is_zero()) continue;
        s += row[m].bar() * p.bar_mat[m][k];
      }
      if (s != row[k]) throw std::logic_error("triangular solve is not bar-invariant");
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qhall
