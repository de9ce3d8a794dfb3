#pragma once

// Quiver representations over a prime field F_p: indecomposables,
// Hom/Ext dimensions, the extension-class census, Hall numbers,
// automorphism-group orders, and the degeneration (Hom) order.

#include <map>
#include <vector>

#include "qhall/cartan.hpp"
#include "qhall/scalar.hpp"

namespace qhall {

// matrix over F_p, entries in [0,p); shape rows x cols
struct FpMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<int>> a;
  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(r, std::vector<int>(c, 0)) {}
};

// modular linear algebra helpers
FpMat fp_mul(const FpMat& x, const FpMat& y, long p);
int fp_rank(FpMat m, long p);
// basis of a complement of the column space of m inside F_p^rows
std::vector<std::vector<int>> fp_coker_basis(const FpMat& m, long p);

// Representation of a fixed quiver: per-vertex dimensions and one matrix
// per arrow, M_a : F^{d_{s(a)}} -> F^{d_{t(a)}} of shape d_t x d_s.
struct FqRep {
  IntVec dims;
  std::vector<FpMat> mats;  // indexed like quiver.arrows
};

FqRep direct_sum(const Quiver& q, const FqRep& m, const FqRep& n);

// dim Hom as the solution space of the intertwiner system f_t M_a = N_a f_s.
int hom_dim(const Quiver& q, long p, const FqRep& m, const FqRep& n);
long ext_dim(const Quiver& q, long p, const FqRep& m, const FqRep& n);

// Krull-Schmidt class: table root index -> multiplicity (> 0).
using KSClass = std::map<int, int>;

// One indecomposable per positive root plus the Hom-dimension table.
struct IndecTable {
  Quiver shape;
  long p = 0;
  std::vector<IntVec> roots;  // fixed order, shared across primes
  std::vector<FqRep> reps;    // reps[k] has dimension vector roots[k]
  IntMat hom;                 // hom[b][g] = dim Hom(M(b), M(g))

  int root_index(const IntVec& beta) const;  // -1 when absent
  IntVec class_dim(const KSClass& c) const;
  FqRep rep_of(const KSClass& c) const;
  KSClass simple(int vertex) const;
  std::string class_str(const KSClass& c) const;
};

// Builds representatives by seeded random search certified by
// dim End = 1; deterministic for a fixed seed.
IndecTable build_indecomposables(const Quiver& shape, long p, unsigned seed = 1);

// Unique class with matching Hom fingerprint; throws
// "not a module of this shape" if the fingerprint system is inconsistent.
KSClass decompose(const IndecTable& t, const FqRep& m);

// For every element of Ext^1(X,Z), the decomposed middle term; counts sum
// to p^{dim Ext^1}.  Throws a "census cap" error when p^{dim Ext^1}
// exceeds the cap.
std::map<KSClass, BigInt> ext_census(const IndecTable& t, const KSClass& x,
                                     const KSClass& z, long cap = 1000000);

// Riedtmann-Peng: F^Y_{XZ} = |Ext^1(X,Z)_Y| / |Hom(X,Z)| * a_Y/(a_X a_Z);
// asserted integral.
BigInt hall_number_F(const IndecTable& t, const KSClass& x, const KSClass& z,
                     const KSClass& y, long cap = 1000000);

BigInt aut_order(const IndecTable& t, const KSClass& c);
BigInt gl_order(int n, long p);

// dim Hom(c, M(beta)) summed by linearity from the table.
long class_hom_to_root(const IndecTable& t, const KSClass& c, int beta_idx);

// Degeneration (Hom) order: a <= b iff the dimension vectors agree and
// dim Hom(a, M(beta)) >= dim Hom(b, M(beta)) for every root.
bool hom_leq(const IndecTable& t, const KSClass& a, const KSClass& b);

}  // namespace qhall
