#pragma once

// Simply-laced root data: quiver shapes, Cartan/Euler forms, positive
// roots, diagram involutions, and the restricted Weyl group action.

#include <string>
#include <utility>
#include <vector>

namespace qhall {

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;

// An oriented simply-laced Dynkin diagram (possibly a disjoint union),
// with an optional diagram involution rho.  Vertices are 0-based
// internally; names carry the 1-based external labels.
struct Quiver {
  std::string label;                        // e.g. "A3", "A1xA1"
  int n = 0;                                // number of vertices
  std::vector<std::string> names;           // display names per vertex
  std::vector<std::pair<int, int>> arrows;  // (source, target)
  IntVec rho;                               // involution, rho[i]

  bool rho_is_identity() const;
  // does rho map every arrow to an arrow (quiver automorphism)?
  bool rho_preserves_arrows() const;
};

// Parse "A3: 1->2, 2->3; rho=(1 3)".  The rho clause is optional and
// takes a product of disjoint cycles of length <= 2.
Quiver parse_quiver(const std::string& spec);

// Linear orientation 1->2->...->n for A_n; standard orientations for D/E
// (branch vertices point toward the tail of the chain).
Quiver standard_quiver(char letter, int rank);

// Two disjoint copies of q (vertices i and i*) with the swap involution.
Quiver doubled_quiver(const Quiver& q);

IntMat cartan_matrix(const Quiver& q);

// Euler form of the module category: sum_i a_i b_i - sum_{i->j} a_i b_j.
long euler_form(const Quiver& q, const IntVec& a, const IntVec& b);
// symmetrization; equals the Cartan pairing
long sym_form(const Quiver& q, const IntVec& a, const IntVec& b);

// s_i acting on the root lattice: x - (sum_j c_{ij} x_j) alpha_i.
IntVec reflect(const IntMat& cartan, int i, const IntVec& x);

// All positive roots, by reflection closure from the simples.
// Throws when the diagram is not of finite (ADE) type.
std::vector<IntVec> positive_roots(const Quiver& q);

// Minimal vertex index in each rho-orbit, in increasing order.
IntVec rho_orbit_reps(const Quiver& q);

// The restricted Weyl generator for orbit representative i, as a word in
// the ordinary simple reflections: {i} when rho(i)=i, else {i, rho(i)}.
IntVec restricted_generator(const Quiver& q, int i);

IntVec apply_word(const IntMat& cartan, const IntVec& word, IntVec x);

// Order of the product of restricted generators at orbit reps i, j.
int braid_order(const Quiver& q, int i, int j);

std::string dimvec_str(const IntVec& v);

}  // namespace qhall
