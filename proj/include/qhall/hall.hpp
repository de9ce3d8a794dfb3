#pragma once

// Generic Hall algebra of a Dynkin quiver: Laurent structure constants by
// prime sampling + interpolation, the u/w/E/U-bases, monomial expressions
// in the simple generators, the psi and bar involutions, and the Hopf
// pairing.

#include <map>
#include <memory>
#include <vector>

#include "qhall/cartan.hpp"
#include "qhall/finrep.hpp"
#include "qhall/scalar.hpp"

namespace qhall {

// Element in the u-basis (or w-basis where stated): class -> coefficient.
struct HallElt {
  std::map<KSClass, Laurent> c;

  bool is_zero() const { return c.empty(); }
  HallElt& operator+=(const HallElt& o);
  HallElt& operator-=(const HallElt& o);
  HallElt operator+(const HallElt& o) const { HallElt r = *this; return r += o; }
  HallElt operator-(const HallElt& o) const { HallElt r = *this; return r -= o; }
  HallElt operator*(const Laurent& s) const;
  bool operator==(const HallElt& o) const { return c == o.c; }
  void trim();
};

using Word = std::vector<int>;  // vertex indices of simple generators

// expression of a class as a rational-function combination of words
using WordCombo = std::vector<std::pair<Word, Frac>>;

class HallAlgebra {
 public:
  explicit HallAlgebra(Quiver shape, long census_cap = 1000000);

  const Quiver& quiver() const { return shape_; }
  const std::vector<IntVec>& roots() const { return roots_; }
  const IndecTable& table(long p);

  // generic (prime-independent) quantities, verified across two primes
  long hom_mn(const KSClass& m, const KSClass& n);
  long dim_end(const KSClass& m) { return hom_mn(m, m); }
  long dim_total(const KSClass& m) const;
  IntVec class_dim(const KSClass& m) const;
  long euler_mn(const KSClass& m, const KSClass& n) const;
  Laurent a_laurent(const KSClass& m);  // |Aut| as a polynomial in q = v^2

  // u-basis structure constants of u_mu * u_nu (memoized)
  const std::map<KSClass, Laurent>& g_table(const KSClass& mu, const KSClass& nu);
  // same computation against an explicit prime list (not memoized)
  std::map<KSClass, Laurent> g_table_with_primes(const KSClass& mu, const KSClass& nu,
                                                 const std::vector<long>& primes);

  HallElt u_elt(const KSClass& cls) { return unit(cls); }
  static HallElt unit(const KSClass& cls);
  HallElt simple(int vertex) const;
  KSClass simple_class(int vertex) const;

  HallElt product(const HallElt& x, const HallElt& y);
  HallElt word_product(const Word& w);  // u_{a_{i1}} * ... * u_{a_{ik}}

  // u_lambda as a combination of words in the simple generators
  WordCombo monomial_expression(const KSClass& cls);

  // psi: coefficient bar + algebra homomorphism fixing each w_{alpha_i};
  // on the u-basis psi(u_{alpha_i}) = -v^{-2} u_{alpha_i}
  HallElt psi(const HallElt& x);
  // bar: coefficient bar + anti-homomorphism, bar(u_{alpha_i}) = v^{-1} u_{alpha_i}
  HallElt bar(const HallElt& x);

  // E_lambda = v^{dim End - dim} w_lambda, returned on the u-basis (exact);
  // u_lambda = a_lambda w_lambda gives E_lambda = v^{...} u_lambda / a_lambda
  // which is generally not Laurent, so E is handled as a w-basis rescaling:
  Laurent e_exponent(const KSClass& cls);  // v^{dim End - dim}
  // U_lambda = v^{-dim End + <lambda,lambda>_Q/2} u_lambda
  HallElt u_rescaled(const KSClass& cls);
  Laurent u_rescale_factor(const KSClass& cls);

  // w-basis conversions: u_lambda = a_lambda w_lambda
  std::map<KSClass, Laurent> to_w_basis(const HallElt& x);
  HallElt from_w_basis(const std::map<KSClass, Laurent>& w);  // throws if not Laurent

  // Hopf pairing (u_lambda, u_mu) = delta a_lambda(v^2), bilinear
  Laurent hopf_pair(const HallElt& x, const HallElt& y);

  // transport along the generator-determined isomorphism to another
  // orientation of the same diagram (u_{alpha_i} -> u_{alpha_i})
  HallElt fourier(const HallElt& x, HallAlgebra& target);

  std::string elt_str(const HallElt& x);

 private:
  Quiver shape_;
  long census_cap_;
  std::vector<IntVec> roots_;
  std::map<long, IndecTable> tables_;
  std::map<std::pair<KSClass, KSClass>, std::map<KSClass, Laurent>> g_memo_;
  std::map<Word, HallElt> word_memo_;
  struct PivotRow {
    KSClass pivot;
    std::map<KSClass, Frac> vec;
    std::map<Word, Frac> expr;
  };
  std::map<IntVec, std::vector<PivotRow>> span_memo_;
  std::map<KSClass, HallElt> psi_memo_, bar_memo_;

  std::vector<PivotRow>& word_span(const IntVec& d);
  std::vector<Word> words_of_dim(const IntVec& d) const;
};

}  // namespace qhall
