#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhall/triangle.hpp"

using namespace qhall;

namespace {
TriangularProblem chain2() {
  TriangularProblem p;
  p.n = 2;
  p.prec = {{0, 1}, {0, 0}};  // 0 < 1
  p.bar_mat = {{Laurent::one(), Laurent::zero()},
               {Laurent::v(1) - Laurent::v(-1), Laurent::one()}};
  return p;
}
}  // namespace

TEST_CASE("identity bar matrix") {
  TriangularProblem p;
  p.n = 3;
  p.prec = {{0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  p.bar_mat.assign(3, std::vector<Laurent>(3));
  for (int i = 0; i < 3; ++i) p.bar_mat[i][i] = Laurent::one();
  auto out = lusztig_basis(p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(out[i][j] == (i == j ? Laurent::one() : Laurent::zero()));
}

TEST_CASE("two-element chain") {
  auto out = lusztig_basis(chain2());
  CHECK(out[1][1] == Laurent::one());
  CHECK(out[1][0] == -Laurent::v(-1));  // b_2 = e_2 - v^{-1} e_1
  CHECK(out[0][0] == Laurent::one());
  CHECK(out[0][1].is_zero());
  // positive-ring variant picks the other solution
  TriangularProblem p = chain2();
  p.positive_ring = true;
  auto pos = lusztig_basis(p);
  CHECK(pos[1][0] == Laurent::v(1));  // b_2 = e_2 + v e_1
}

TEST_CASE("idempotence") {
  // feeding the output's bar matrix (the identity) returns the identity
  TriangularProblem p = chain2();
  auto first = lusztig_basis(p);
  // the new basis is bar-fixed, so its bar matrix is the identity
  TriangularProblem p2;
  p2.n = 2;
  p2.prec = p.prec;
  p2.bar_mat = {{Laurent::one(), Laurent::zero()}, {Laurent::zero(), Laurent::one()}};
  auto again = lusztig_basis(p2);
  CHECK(again[1][0].is_zero());
  CHECK(again[0][0] == Laurent::one());
  (void)first;
}

TEST_CASE("three-chain with nested corrections") {
  // bar(e_3) = e_3 + (v - v^{-1}) e_2 + (v^2 - 1) e_1
  TriangularProblem p;
  p.n = 3;
  p.prec = {{0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  Laurent d1 = Laurent::v(1) - Laurent::v(-1);
  Laurent d2 = Laurent::v(2) - Laurent::one();
  p.bar_mat = {{Laurent::one(), Laurent::zero(), Laurent::zero()},
               {d1, Laurent::one(), Laurent::zero()},
               {d2, d1, Laurent::one()}};
  // check involutivity holds for this data before solving
  auto out = lusztig_basis(p);
  // verify bar(b_l) = b_l directly
  for (int l = 0; l < 3; ++l)
    for (int k = 0; k < 3; ++k) {
      Laurent s;
      for (int m = 0; m < 3; ++m) s += out[l][m].bar() * p.bar_mat[m][k];
      CHECK(s == out[l][k]);
    }
  for (int l = 0; l < 3; ++l)
    for (int m = 0; m < 3; ++m) {
      if (m == l) continue;
      if (!out[l][m].is_zero()) CHECK(out[l][m].in_vminus_ring());
    }
}

TEST_CASE("error reporting") {
  // non-involutive bar data
  TriangularProblem p = chain2();
  p.bar_mat[1][0] = Laurent::v(1);  // bar(v) != -v, so B bar(B) != id
  CHECK_THROWS_WITH(lusztig_basis(p), "invalid bar data");
  // non-unitriangular diagonal
  TriangularProblem p2 = chain2();
  p2.bar_mat[1][1] = Laurent::v(1);
  CHECK_THROWS_WITH(lusztig_basis(p2), "invalid bar data");
  // entry outside the declared order
  TriangularProblem p3 = chain2();
  p3.prec = {{0, 0}, {0, 0}};
  CHECK_THROWS_WITH(lusztig_basis(p3), "invalid bar data");
  // rational correction has no solution in v^{-1}Z[v^{-1}]
  TriangularProblem p4 = chain2();
  p4.bar_mat[1][0] = (Laurent::v(1) - Laurent::v(-1)).scale(Rational(1, 2));
  CHECK_THROWS_WITH(lusztig_basis(p4), "ring mismatch");
}
