#pragma once

// Hall algebra of the bound quiver algebra attached to a quiver with
// involution: module counting over prime fields, the twisted product,
// degreewise reduction onto the [X]*[K_alpha] basis, localization of the
// K-classes, generic structure constants by prime interpolation, and the
// bar-triangular dual basis.

#include <array>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhall/cartan.hpp"
#include "qhall/finrep.hpp"
#include "qhall/hall.hpp"
#include "qhall/scalar.hpp"

namespace qhall {

// The doubled-arrow bound algebra: one epsilon loop per fixed vertex, an
// epsilon arrow pair per swapped vertex pair, nilpotency and commutation
// relations.
struct IQuiverAlgebra {
  struct RelTerm {
    int first = 0, second = 0;  // arrow indices in qbar; second after first
    int coeff = 0;
  };

  Quiver shape;  // the original quiver, rho set
  Quiver qbar;   // shape arrows first, then epsilon arrows
  std::vector<int> eps;  // eps[i] = qbar arrow index of epsilon_i
  std::vector<std::vector<RelTerm>> relations;

  bool is_module(const FqRep& m, long p) const;
  FqRep simple(int i) const;
  FqRep gen_simple(int i) const;  // the K-class module at vertex i
  IntVec kdim(int i) const;       // its dimension vector

  struct Projective {
    FqRep rep;
    std::vector<std::vector<int>> paths;  // generating word per basis element
  };
  Projective projective(int i) const;
};

// Throws "involution invalid" / "adjacent swapped vertices" on bad input.
IQuiverAlgebra build_iquiver_algebra(const Quiver& shape);

// Basis index: (K-exponent vector alpha, module class lambda).
using IBasisKey = std::pair<IntVec, KSClass>;

struct IHallElt {
  std::map<IBasisKey, Laurent> c;

  bool is_zero() const { return c.empty(); }
  IHallElt& operator+=(const IHallElt& o);
  IHallElt& operator-=(const IHallElt& o);
  IHallElt operator+(const IHallElt& o) const { IHallElt r = *this; return r += o; }
  IHallElt operator-(const IHallElt& o) const { IHallElt r = *this; return r -= o; }
  IHallElt operator*(const Laurent& s) const;
  bool operator==(const IHallElt& o) const { return c == o.c; }
  void trim();
};

// Value in Q(q^{1/4}): coefficients of u^0..u^3 with u^4 = q.
using QV = std::array<Rational, 4>;

class IHallAlgebra {
 public:
  explicit IHallAlgebra(Quiver shape, long dim_cap = 6, bool rank2 = false);
  ~IHallAlgebra();

  const Quiver& quiver() const { return shape_; }
  const IQuiverAlgebra& algebra() const { return lam_; }
  HallAlgebra& hall() { return hall_; }

  // elements
  static IHallElt unit();
  static IHallElt basis_elt(const IntVec& alpha, const KSClass& lambda);
  IHallElt u_elt(const KSClass& lambda) const;
  IHallElt kclass(const IntVec& alpha) const;
  IHallElt simple(int i) const;
  IHallElt bgen(int i) const;  // v^{-1/2} [S_i]
  IHallElt kgen(int i) const;  // v^{-1}[K_i] at fixed vertices, [K_i] otherwise
  IHallElt kcal(int i) const;  // v * kgen at fixed vertices, kgen otherwise

  IHallElt product(const IHallElt& x, const IHallElt& y);
  IHallElt power(const IHallElt& x, int n);

  // K commutation exponent of [K_i] past a class of dimension vector d
  int k_exponent(int i, const IntVec& d) const;

  // twisted K-action and the bar anti-involution
  IHallElt diamond(const IntVec& alpha, const IHallElt& x);
  IHallElt bar(const IHallElt& x);

  // rescaled class U_lambda and the dual basis element L
  Laurent u_factor(const KSClass& lambda);
  IHallElt u_rescaled(const KSClass& lambda);
  IHallElt dual_L(const KSClass& lambda);
  IHallElt dual_L(const IntVec& alpha, const KSClass& lambda);

  // generic structure constants of u_lambda * u_mu
  const std::map<IBasisKey, Laurent>& gtable(const KSClass& lambda, const KSClass& mu);

  // defining relations of the generator images; throws on failure
  void verify_presentation();
  void verify_presentation_at(long p);

  // counting layer at one prime
  std::map<IBasisKey, QV> prime_product(long p, const IBasisKey& x, const IBasisKey& y);
  int class_count(long p, const IntVec& d);
  bool dsg_isomorphic(long p, const FqRep& m, const FqRep& n);
  long lambda_ext_dim(long p, const FqRep& m, const FqRep& n);
  long lambda_hom_dim(long p, const FqRep& m, const FqRep& n);

  static QV qv_of(const Laurent& x, long q);
  static bool qv_zero(const QV& a);

  std::string elt_str(const IHallElt& x);

 private:
  Quiver shape_;
  IQuiverAlgebra lam_;
  long cap_;
  bool rank2_;
  IntMat cartan_;
  HallAlgebra hall_;
  std::vector<long> primes_;

  struct Ctx;  // per-prime state
  std::map<long, std::unique_ptr<Ctx>> ctx_;
  Ctx& ctx(long p);

  std::map<std::pair<KSClass, KSClass>, std::map<IBasisKey, Laurent>> g_memo_;
  std::map<std::pair<KSClass, int>, std::map<IBasisKey, Laurent>> gs_memo_;
  struct SpanExpr {  // basis element over K-shifted words in the simples
    std::vector<std::tuple<IntVec, std::vector<int>, Frac>> terms;
  };
  std::map<IntVec, std::map<IBasisKey, SpanExpr>> span_memo_;
  std::map<Word, IHallElt> word_memo_;
  std::map<IBasisKey, IHallElt> bar_memo_;
  std::map<KSClass, IHallElt> dual_memo_;

  IHallElt norm(const IHallElt& x) const;
  void check_coverage(const IntVec& d) const;
  IntVec key_degree(const IBasisKey& k) const;
  std::vector<KSClass> classes_with_dim(const IntVec& d);
  std::vector<IBasisKey> basis_of_degree(const IntVec& d);
  const std::map<IBasisKey, SpanExpr>& span(const IntVec& d);
  IHallElt word_value(const std::vector<int>& w);
  const std::map<IBasisKey, Laurent>& gtable_simple(const KSClass& nu, int j);
  IHallElt mul_simple(const IHallElt& x, int j);
  IHallElt shift_k(const IHallElt& x, const IntVec& beta) const;
  IHallElt kclass_left(const IntVec& gamma, const IHallElt& x) const;
  IHallElt bar_key(const IBasisKey& k);
  struct GenTerm {  // formal combination of words in the generators
    std::vector<std::pair<char, int>> word;  // ('B', i) or ('K', i)
    Laurent coeff;
  };
  std::vector<std::vector<GenTerm>> relation_words() const;

  // counting layer internals
  int classify(Ctx& c, const FqRep& m);
  void ensure_dim(Ctx& c, const IntVec& d);
  const std::map<int, QV>& praw(Ctx& c, int m, int n);
  const std::map<int, QV>& bval_ids(Ctx& c, const IBasisKey& k);
  std::map<IBasisKey, QV> reduce_ids(Ctx& c, const IntVec& d,
                                     const std::map<int, QV>& t);
  int sigma_id(Ctx& c, int id);
  std::vector<int> resh_key(Ctx& c, int id);
};

}  // namespace qhall
