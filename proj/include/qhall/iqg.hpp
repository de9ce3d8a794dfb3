#pragma once

// The universal iquantum group inside the doubled algebra: generators
// B_i = F_i + E_{rho(i)} K_i' and ktilde_i = K_i K'_{rho(i)}, carried as
// PBW elements together with their expressions in those generators.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhall/double_algebra.hpp"

namespace qhall {

// term (a, w) stands for ktilde^a * B_{w_1} ... B_{w_k}
struct IQGElt {
  std::map<std::pair<IntVec, Word>, Frac> terms;
  DDElt value;

  bool is_zero() const { return value.is_zero() && terms.empty(); }
  void trim();
};

class IQG {
 public:
  explicit IQG(Quiver shape);

  const Quiver& quiver() const { return shape_; }
  DoubleAlgebra& dd() { return dd_; }

  IQGElt one();
  IQGElt B(int i);
  IQGElt ktilde(const IntVec& a);
  IQGElt kgen(int i, int e = 1);
  // the rescaled generator: v ktilde_i at split vertices, ktilde_i otherwise
  IQGElt Kcal(int i, int e = 1);

  IQGElt add(const IQGElt& x, const IQGElt& y);
  IQGElt sub(const IQGElt& x, const IQGElt& y);
  IQGElt scale(const IQGElt& x, const Frac& f);
  IQGElt multiply(const IQGElt& x, const IQGElt& y);
  IQGElt power(const IQGElt& x, int m);
  // [x,y]_v = xy - v yx
  IQGElt vbracket(const IQGElt& x, const IQGElt& y);

  // the intrinsic bar: anti-linear anti-automorphism fixing every B_i and
  // every script-K generator
  IQGElt ibar(const IQGElt& x);

  // relative braid operator at an orbit representative
  IQGElt ibraid(int i, const IQGElt& x);

  // re-express a subalgebra element in short generator words; throws if
  // no expression exists
  IQGElt from_value(const DDElt& val);

  DDElt term_value(const IntVec& a, const Word& w);
  // recompute the value from the generator expression; throws on mismatch
  void certify(const IQGElt& x);
  // check every defining relation under the embedding; throws with witness
  void verify_presentation();

  std::string str(const IQGElt& x);

 private:
  Quiver shape_;
  IntMat cartan_;
  DoubleAlgebra dd_;
  std::vector<DDElt> bval_;
  std::map<std::pair<IntVec, Word>, DDElt> tv_memo_;
  std::map<std::pair<int, int>, IQGElt> braid_memo_;

  bool split(int i) const { return shape_.rho[i] == i; }
  long kmove(const IntVec& a, const Word& w) const;
  IQGElt braid_gen_image(int i, int j);
  IQGElt braid_k_image(int i, const IntVec& a);
};

}  // namespace qhall
