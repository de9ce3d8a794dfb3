#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhall/finrep.hpp"

using namespace qhall;

namespace {
FqRep random_rep(const Quiver& q, const IntVec& dims, long p, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, static_cast<int>(p) - 1);
  FqRep m;
  m.dims = dims;
  for (auto& [s, t] : q.arrows) {
    FpMat a(dims[t], dims[s]);
    for (int r = 0; r < a.rows; ++r)
      for (int c = 0; c < a.cols; ++c) a.a[r][c] = coin(rng);
    m.mats.push_back(std::move(a));
  }
  return m;
}
}  // namespace

TEST_CASE("modular linear algebra") {
  FpMat m(2, 2);
  m.a = {{1, 2}, {2, 4}};
  CHECK(fp_rank(m, 5) == 1);
  CHECK(fp_rank(m, 2) == 1);  // reduces to {{1,0},{0,0}}
  FpMat id(3, 3);
  for (int i = 0; i < 3; ++i) id.a[i][i] = 1;
  CHECK(fp_rank(id, 7) == 3);
  CHECK(fp_coker_basis(id, 7).empty());
  FpMat col(3, 1);
  col.a = {{1}, {0}, {0}};
  auto cb = fp_coker_basis(col, 3);
  REQUIRE(cb.size() == 2);
  CHECK(cb[0] == std::vector<int>{0, 1, 0});
  CHECK(cb[1] == std::vector<int>{0, 0, 1});
  FpMat x(2, 3), y(3, 2);
  x.a = {{1, 2, 0}, {0, 1, 1}};
  y.a = {{1, 0}, {0, 1}, {1, 1}};
  FpMat xy = fp_mul(x, y, 5);
  CHECK(xy.a == std::vector<std::vector<int>>{{1, 2}, {1, 2}});
}

TEST_CASE("indecomposables per root") {
  for (long p : {2L, 3L, 5L}) {
    auto t = build_indecomposables(parse_quiver("A2: 1->2"), p);
    REQUIRE(t.roots.size() == 3);
    int k = t.root_index({1, 1});
    REQUIRE(k >= 0);
    CHECK(t.reps[k].mats[0].a[0][0] != 0);  // k -> k with nonzero map
    for (size_t b = 0; b < t.roots.size(); ++b) CHECK(t.hom[b][b] == 1);
  }
  auto a3 = build_indecomposables(standard_quiver('A', 3), 2);
  CHECK(a3.roots.size() == 6);
  for (size_t k = 0; k < a3.roots.size(); ++k) {
    CHECK(a3.reps[k].dims == a3.roots[k]);
    KSClass c = decompose(a3, a3.reps[k]);
    CHECK(c == KSClass{{static_cast<int>(k), 1}});
  }
  auto d4 = build_indecomposables(standard_quiver('D', 4), 3);
  CHECK(d4.roots.size() == 12);
  for (size_t k = 0; k < d4.roots.size(); ++k)
    CHECK(decompose(d4, d4.reps[k]) == KSClass{{static_cast<int>(k), 1}});
}

TEST_CASE("hom and ext dimensions") {
  Quiver q = parse_quiver("A2: 1->2");
  auto t = build_indecomposables(q, 2);
  int s1 = t.root_index({1, 0}), s2 = t.root_index({0, 1}), p1 = t.root_index({1, 1});
  CHECK(hom_dim(q, 2, t.reps[p1], t.reps[s1]) == 1);  // projective cover P1 -> S1
  CHECK(hom_dim(q, 2, t.reps[p1], t.reps[s2]) == 0);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    IntVec d1{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    IntVec d2{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
    FqRep m = random_rep(q, d1, 3, rng), n = random_rep(q, d2, 3, rng);
    CHECK(hom_dim(q, 3, m, n) - ext_dim(q, 3, m, n) == euler_form(q, d1, d2));
    CHECK(ext_dim(q, 3, m, n) >= 0);
  }
  CHECK(hom_dim(q, 2, t.reps[s1], t.reps[s2]) == 0);
  CHECK(ext_dim(q, 2, t.reps[s1], t.reps[s2]) == 1);
  CHECK(ext_dim(q, 2, t.reps[s2], t.reps[s1]) == 0);
  // Hom(P1, S1): S1 is the simple at the source, P1 -> S1 the projective cover
  CHECK(hom_dim(q, 2, t.reps[p1], t.reps[s1]) + hom_dim(q, 2, t.reps[p1], t.reps[s2]) == 1);
}

TEST_CASE("decompose via fingerprints") {
  Quiver q = parse_quiver("A2: 1->2");
  auto t = build_indecomposables(q, 3);
  int s1 = t.root_index({1, 0}), s2 = t.root_index({0, 1}), p1 = t.root_index({1, 1});
  FqRep ss = direct_sum(q, t.reps[s1], t.reps[s2]);
  CHECK(decompose(t, ss) == KSClass{{s1, 1}, {s2, 1}});
  // dims (2,1), arrow of rank 1 -> M(a1+a2) + S1
  FqRep m;
  m.dims = {2, 1};
  m.mats = {FpMat(1, 2)};
  m.mats[0].a = {{1, 0}};
  CHECK(decompose(t, m) == KSClass{{s1, 1}, {p1, 1}});
  // any module decomposes consistently with its dimension vector
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    IntVec d{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    FqRep r = random_rep(q, d, 3, rng);
    CHECK(t.class_dim(decompose(t, r)) == d);
  }
}

TEST_CASE("extension census") {
  Quiver q = parse_quiver("A2: 1->2");
  auto t = build_indecomposables(q, 2);
  int s1 = t.root_index({1, 0}), s2 = t.root_index({0, 1}), p1 = t.root_index({1, 1});
  auto c = ext_census(t, {{s1, 1}}, {{s2, 1}});
  REQUIRE(c.size() == 2);
  CHECK(c[KSClass{{s1, 1}, {s2, 1}}] == 1);
  CHECK(c[KSClass{{p1, 1}}] == 1);
  auto c2 = ext_census(t, {{s2, 1}}, {{s1, 1}});
  REQUIRE(c2.size() == 1);
  CHECK(c2[KSClass{{s1, 1}, {s2, 1}}] == 1);
  auto a1 = build_indecomposables(parse_quiver("A1:"), 2);
  auto c3 = ext_census(a1, a1.simple(0), a1.simple(0));
  REQUIRE(c3.size() == 1);
  CHECK(c3[KSClass{{0, 2}}] == 1);
  // census counts always sum to p^{dim Ext}
  auto t3 = build_indecomposables(standard_quiver('A', 3), 3);
  int u1 = t3.root_index({1, 0, 0}), u3 = t3.root_index({0, 0, 1}), u2 = t3.root_index({0, 1, 0});
  auto big = ext_census(t3, {{u1, 1}, {u2, 1}}, {{u2, 1}, {u3, 1}});
  BigInt sum = 0;
  for (auto& [cls, n] : big) sum += n;
  FqRep mx = t3.rep_of({{u1, 1}, {u2, 1}}), mz = t3.rep_of({{u2, 1}, {u3, 1}});
  BigInt want = 1;
  for (long i = 0; i < ext_dim(t3.shape, 3, mx, mz); ++i) want *= 3;
  CHECK(sum == want);
}

TEST_CASE("hall numbers") {
  Quiver q = parse_quiver("A2: 1->2");
  auto t = build_indecomposables(q, 2);
  int s1 = t.root_index({1, 0}), s2 = t.root_index({0, 1}), p1 = t.root_index({1, 1});
  CHECK(hall_number_F(t, {{s1, 1}}, {{s2, 1}}, {{p1, 1}}) == 1);
  CHECK(hall_number_F(t, {{s1, 1}}, {{s2, 1}}, {{s1, 1}, {s2, 1}}) == 1);
  CHECK(hall_number_F(t, {{s2, 1}}, {{s1, 1}}, {{p1, 1}}) == 0);
  auto a1 = build_indecomposables(parse_quiver("A1:"), 3);
  // F^{S+S}_{S,S} = q + 1 submodule count
  CHECK(hall_number_F(a1, a1.simple(0), a1.simple(0), {{0, 2}}) == 4);
}

TEST_CASE("automorphism orders") {
  auto a1 = build_indecomposables(parse_quiver("A1:"), 3);
  CHECK(aut_order(a1, a1.simple(0)) == 2);              // q - 1
  CHECK(aut_order(a1, {{0, 2}}) == BigInt(8 * 6));      // |GL2(F3)|
  CHECK(gl_order(2, 3) == 48);
  auto a2 = build_indecomposables(parse_quiver("A2: 1->2"), 2);
  int s1 = a2.root_index({1, 0}), s2 = a2.root_index({0, 1});
  CHECK(aut_order(a2, {{s1, 1}, {s2, 1}}) == 1);        // (q-1)^2 at q=2
  // brute-force check at q=2: |Aut| counts invertible intertwiners
  Quiver q = a2.shape;
  int p1 = a2.root_index({1, 1});
  KSClass cls{{s1, 1}, {p1, 1}};
  FqRep m = a2.rep_of(cls);
  // enumerate all endomorphisms f=(f1,f2) with f1 2x2, f2 1x1 over F2
  long count = 0;
  for (int bits = 0; bits < 32; ++bits) {
    FpMat f1(2, 2), f2(1, 1);
    f1.a = {{bits & 1, (bits >> 1) & 1}, {(bits >> 2) & 1, (bits >> 3) & 1}};
    f2.a = {{(bits >> 4) & 1}};
    FpMat lhs = fp_mul(f2, m.mats[0], 2), rhs = fp_mul(m.mats[0], f1, 2);
    if (lhs.a != rhs.a) continue;
    if (fp_rank(f1, 2) == 2 && fp_rank(f2, 2) == 1) ++count;
  }
  CHECK(aut_order(a2, cls) == count);
}

TEST_CASE("degeneration order") {
  Quiver q = parse_quiver("A2: 1->2");
  auto t = build_indecomposables(q, 2);
  int s1 = t.root_index({1, 0}), s2 = t.root_index({0, 1}), p1 = t.root_index({1, 1});
  KSClass semi{{s1, 1}, {s2, 1}}, gen{{p1, 1}};
  CHECK(hom_leq(t, semi, gen));
  CHECK(!hom_leq(t, gen, semi));
  CHECK(hom_leq(t, gen, gen));
  CHECK_THROWS(hom_leq(t, {{s1, 1}}, {{s2, 1}}));
}
