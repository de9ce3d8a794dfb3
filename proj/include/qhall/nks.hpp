#pragma once

// Framed repetition-quiver combinatorics: derived-category labels by
// knitting, F-quotients, the quantum Cartan matrix, l-dominant pairs,
// generator vectors, and the rank-1 closed forms used as oracles.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhall/double_algebra.hpp"
#include "qhall/finrep.hpp"

namespace qhall {

// a vertex of the quotient, named by its derived-category label
struct NKSLabel {
  IntVec root;  // dimension vector of the indecomposable module
  int shift;    // homological shift of the orbit representative
};

class NKS {
 public:
  // itype false: quotient by the square of the shift functor;
  // itype true: quotient by shift composed with the involution functor
  NKS(Quiver shape, bool itype);

  const Quiver& quiver() const { return shape_; }
  bool itype() const { return itype_; }
  const IndecTable& table() const { return table_; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int frozen_count() const { return static_cast<int>(frozen_c_.size()); }
  const NKSLabel& label(int x) const { return labels_[x]; }
  int vertex_of(const IntVec& root, int shift) const;
  // frozen copy attached to the shift-s simple at vertex i
  int frozen_of(int i, int shift = 0) const;
  int c_vertex(int f) const { return frozen_c_[f]; }  // its framed vertex
  int tau(int x) const { return tau_[x]; }
  const std::vector<int>& arrows_in(int x) const { return arrows_in_[x]; }

  IntVec quantum_cartan(const IntVec& v) const;
  IntVec sigma_star(const IntVec& w) const;
  bool l_dominant(const IntVec& v, const IntVec& w) const;
  // complete within the certified search region; throws if a solution
  // touches the cap (cap <= 0 picks one from w)
  std::vector<IntVec> enumerate_l_dominant(const IntVec& w, int cap = 0) const;

  // (v^i, w^i) of the i-th generator
  std::pair<IntVec, IntVec> generator_vectors(int i) const;
  // (v, w) with sigma*w - C_q v = lambda and v minimal (v = 0 if possible)
  std::pair<IntVec, IntVec> dict(const KSClass& lambda) const;

  std::string dot() const;

 private:
  Quiver shape_;
  bool itype_;
  IndecTable table_;
  std::vector<NKSLabel> labels_;             // orbit representatives
  std::map<std::pair<int, int>, int> vid_;   // (root index, shift) -> vertex
  std::vector<int> tau_;
  std::vector<std::vector<int>> arrows_in_;  // non-frozen sources only
  std::vector<int> frozen_c_;                // frozen f -> its C vertex
  std::map<int, int> frozen_id_;             // C vertex -> frozen f

  std::pair<int, int> orbit_key(const IntVec& signed_dim, int shift) const;
};

// closed form of the product of chevE^a and chevF^b over the rank-1
// double, as coefficients on L-symbols keyed by (v1, v2)
std::map<std::pair<int, int>, Frac> rank1_EaFb(int a, int b);

// the L-basis element of the rank-1 double in straightened normal form
DDElt rank1_L(DoubleAlgebra& d, int v1, int v2, int w1, int w2);

// rank-1 split case: L(k, m) as a commutative polynomial in (B, script-K),
// keyed by (B exponent, K exponent)
std::map<std::pair<int, int>, BigInt> irank1_L(int k, int m);
// B^a K^b over the L-symbols, keyed by (k, m)
std::map<std::pair<int, int>, BigInt> irank1_inverse(int a, int b);

}  // namespace qhall
