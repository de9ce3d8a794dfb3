#pragma once

// Canonical and dual canonical bases of the generic Hall algebra,
// pairing duality, and orientation-invariance checks.

#include <map>
#include <vector>

#include "qhall/hall.hpp"
#include "qhall/triangle.hpp"

namespace qhall {

// Per-degree family: trans[l] expands member l over the standard basis
// (E_lambda for the canonical family, U_lambda for the dual one).
struct BasisFamily {
  std::vector<KSClass> classes;
  std::vector<std::vector<Laurent>> trans;
};

// All Krull-Schmidt classes with the given dimension vector.
std::vector<KSClass> classes_of_dim(HallAlgebra& h, const IntVec& d);

// psi-invariant family triangular over {E_lambda} w.r.t. the Hom order.
BasisFamily canonical_basis(HallAlgebra& h, const IntVec& d);
// bar-invariant family triangular over {U_lambda}.
BasisFamily dual_canonical_basis(HallAlgebra& h, const IntVec& d);

// n(d) = (d,d)_Q/2 - sum_i d_i; shared by every class of the degree.
long n_exponent(const Quiver& q, const IntVec& d);

// family members on the u-basis with rational-function coefficients
std::vector<std::map<KSClass, Frac>> family_in_u(HallAlgebra& h, const BasisFamily& f,
                                                 bool canonical);

// verifies (B_mu, v^{-n/2} c_lambda) = delta_{mu,lambda}; throws with the
// offending pair on failure
void pairing_duality_check(HallAlgebra& h, const IntVec& d);

// verifies the generator-determined isomorphism maps each (dual)
// canonical element of one orientation to one of the other
void fourier_check(HallAlgebra& a, HallAlgebra& b, const IntVec& d);

// exact inverse of a unitriangular Laurent matrix
std::vector<std::vector<Laurent>> invert_unitriangular(
    const std::vector<std::vector<Laurent>>& m);

}  // namespace qhall
