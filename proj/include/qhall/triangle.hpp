#pragma once

// Bar-invariant triangular bases on a finite poset (Lusztig's Lemma):
// given a standard basis and the bar matrix, produce the unique basis
// b_l = e_l + (corrections strictly below l in the chosen ring).

#include <vector>

#include "qhall/scalar.hpp"

namespace qhall {

struct TriangularProblem {
  int n = 0;
  // strict partial order: prec[a][b] true when a < b
  std::vector<std::vector<char>> prec;
  // bar(e_l) = sum_m bar_mat[l][m] e_m; unitriangular downward:
  // bar_mat[l][l] = 1 and bar_mat[l][m] = 0 unless m < l
  std::vector<std::vector<Laurent>> bar_mat;
  // correction ring: false -> v^{-1}Z[v^{-1}], true -> vZ[v]
  bool positive_ring = false;
};

// Transition matrix P with b_l = sum_m P[l][m] e_m; P unitriangular,
// off-diagonal entries in the selected ring, bar(b_l) = b_l.
// Throws "invalid bar data" when the bar matrix is not an involution or
// not triangular, and "ring mismatch" when no solution exists in the ring.
std::vector<std::vector<Laurent>> lusztig_basis(const TriangularProblem& p);

}  // namespace qhall
