#pragma once

// The doubled quantum algebra on PBW normal forms F(lambda-) E(lambda+)
// K^mu K'^nu: straightening, involutions, the diamond action, Heisenberg
// quotients, braid operators, and the two-stage double basis.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhall/canon.hpp"
#include "qhall/hall.hpp"

namespace qhall {

// One normal-form monomial: F-part class, E-part class, K/K' exponents.
struct PBWMono {
  KSClass fm, ep;
  IntVec mu, nu;

  bool operator<(const PBWMono& o) const {
    return std::tie(fm, ep, mu, nu) < std::tie(o.fm, o.ep, o.mu, o.nu);
  }
  bool operator==(const PBWMono& o) const {
    return fm == o.fm && ep == o.ep && mu == o.mu && nu == o.nu;
  }
};

struct DDElt {
  std::map<PBWMono, Frac> c;

  bool is_zero() const { return c.empty(); }
  DDElt& operator+=(const DDElt& o);
  DDElt& operator-=(const DDElt& o);
  DDElt operator+(const DDElt& o) const { DDElt r = *this; return r += o; }
  DDElt operator-(const DDElt& o) const { DDElt r = *this; return r -= o; }
  DDElt operator*(const Frac& s) const;
  bool operator==(const DDElt& o) const { return c == o.c; }
  void trim();
};

enum class DDMap { Bar, Psi, Star };

class DoubleAlgebra {
 public:
  explicit DoubleAlgebra(Quiver shape);

  const Quiver& quiver() const { return shape_; }
  HallAlgebra& hall() { return hall_; }

  DDElt one() const;
  DDElt chevE(int i);  // E_i = v^{-1/2} E(alpha_i)
  DDElt chevF(int i);
  DDElt Kmono(const IntVec& mu, const IntVec& nu);
  DDElt Ki(int i, int e = 1);
  DDElt Kpi(int i, int e = 1);
  DDElt e_class(const KSClass& cls);
  DDElt f_class(const KSClass& cls);

  DDElt multiply(const DDElt& x, const DDElt& y);
  DDElt power(const DDElt& x, int m);
  // x^m / [m]!; throws if the result leaves the Laurent span
  DDElt divided_power(const DDElt& x, int m);

  DDElt involution(const DDElt& x, DDMap which);

  // Gamma-degree of a monomial: (wt ep + mu + nu, wt fm + mu + nu)
  std::pair<IntVec, IntVec> gamma_deg(const PBWMono& m) const;
  bool homogeneous(const DDElt& x, std::pair<IntVec, IntVec>* deg = nullptr) const;

  // K^kmu K'^knu acting by the twisted product on homogeneous x
  DDElt diamond(const IntVec& kmu, const IntVec& knu, const DDElt& x);

  // sign > 0 drops nu != 0 monomials, sign < 0 drops mu != 0
  DDElt heisenberg_project(const DDElt& x, int sign) const;
  DDElt h_multiply(const DDElt& x, const DDElt& y, int sign);

  DDElt braid_T(int i, const DDElt& x, bool inverse = false);

  struct BGIndex {
    IntVec mu, nu;
    KSClass fm, ep;
  };
  struct BGFamily {
    std::vector<BGIndex> idx;
    std::vector<DDElt> elts;
  };
  // stage-1 family of the Gamma-degree piece, inside the + Heisenberg quotient
  BGFamily bg_stage1(const IntVec& gplus, const IntVec& gminus);
  // stage-2 (full) double basis of the Gamma-degree piece
  BGFamily bg_double_basis(const IntVec& gplus, const IntVec& gminus);

  // dual basis of the degree-d half, as E/F-class coordinate maps
  std::vector<std::pair<KSClass, std::map<KSClass, Frac>>> half_dual_family(const IntVec& d);

  std::string str(const DDElt& x);

 private:
  Quiver shape_;
  IntMat cartan_;
  HallAlgebra hall_;
  std::map<std::pair<IntVec, int>, std::map<KSClass, DDElt>> fstraight_memo_;
  std::map<IntVec, std::vector<std::pair<KSClass, std::map<KSClass, Frac>>>> dual_memo_;

  long cpair(const IntVec& a, const IntVec& b) const;
  DDElt mul_e_class(const DDElt& x, const KSClass& cls);
  DDElt mul_f_class(const DDElt& x, const KSClass& cls);
  DDElt mul_single_f(const DDElt& x, int j);
  DDElt mul_chev_e(const DDElt& x, int i);
  const DDElt& class_f(const KSClass& b, int j);
  // E(lambda) F_j in normal form for every class of dimension d
  const std::map<KSClass, DDElt>& fstraight(const IntVec& d, int j);
  std::map<KSClass, Frac> side_map(const KSClass& cls, DDMap which);
  DDElt braid_image(int i, bool inverse, bool eside, int j);
  BGFamily bg_stage(const IntVec& gplus, const IntVec& gminus, bool stage2);
};

}  // namespace qhall
