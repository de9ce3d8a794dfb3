#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhall/hall.hpp"

using namespace qhall;

namespace {
HallElt apply_combo(HallAlgebra& h, const WordCombo& combo) {
  std::map<KSClass, Frac> acc;
  for (auto& [w, f] : combo)
    for (auto& [k, c] : h.word_product(w).c) acc[k] += f * Frac(c);
  HallElt r;
  for (auto& [k, f] : acc)
    if (!f.is_zero()) r.c.emplace(k, f.to_laurent_or_throw());
  return r;
}
}  // namespace

TEST_CASE("rank 1 products") {
  HallAlgebra h(parse_quiver("A1:"));
  KSClass s = h.simple_class(0);
  HallElt u = h.simple(0);
  HallElt uu = h.product(u, u);
  REQUIRE(uu.c.size() == 1);
  KSClass s2{{0, 2}};
  CHECK(uu.c.at(s2) == Laurent::v(-1));  // u_a * u_a = v^{-1} u_{2a}
  // divided-power tower: u_a^m = v^{-m(m-1)/2} u_{ma}
  HallElt p = u;
  for (int m = 2; m <= 5; ++m) {
    p = h.product(p, u);
    REQUIRE(p.c.size() == 1);
    CHECK(p.c.at(KSClass{{0, m}}) == Laurent::u(-m * (m - 1)));
  }
  // monomial expression inverts the product
  WordCombo combo = h.monomial_expression(s2);
  REQUIRE(combo.size() == 1);
  CHECK(combo[0].second.to_laurent_or_throw() == Laurent::v(1));  // u_{2a} = v u_a u_a
}

TEST_CASE("A2 products") {
  HallAlgebra h(parse_quiver("A2: 1->2"));
  KSClass s1 = h.simple_class(0), s2 = h.simple_class(1);
  int p1 = -1;
  for (size_t k = 0; k < h.roots().size(); ++k)
    if (h.roots()[k] == IntVec{1, 1}) p1 = static_cast<int>(k);
  REQUIRE(p1 >= 0);
  KSClass gen{{p1, 1}};
  KSClass semi = s1;
  semi.insert(s2.begin(), s2.end());
  HallElt u12 = h.product(h.simple(0), h.simple(1));
  REQUIRE(u12.c.size() == 2);
  CHECK(u12.c.at(semi) == Laurent::v(-1));
  CHECK(u12.c.at(gen) == Laurent::v(1) - Laurent::v(-1));
  HallElt u21 = h.product(h.simple(1), h.simple(0));
  REQUIRE(u21.c.size() == 1);
  CHECK(u21.c.at(semi) == Laurent::one());
  // u_{P1} = (v-v^{-1})^{-1} (u1 u2 - v^{-1} u2 u1)
  HallElt lhs = apply_combo(h, h.monomial_expression(gen));
  CHECK(lhs == HallAlgebra::unit(gen));
  HallElt direct = (u12 - u21 * Laurent::v(-1));
  Laurent d = Laurent::v(1) - Laurent::v(-1);
  REQUIRE(direct.c.size() == 1);
  CHECK(direct.c.at(gen) == d);
}

TEST_CASE("associativity") {
  HallAlgebra h(parse_quiver("A2: 1->2"));
  std::vector<KSClass> cls;
  for (size_t k = 0; k < h.roots().size(); ++k) cls.push_back({{static_cast<int>(k), 1}});
  cls.push_back({{0, 1}, {1, 1}});
  for (auto& a : cls)
    for (auto& b : cls)
      for (auto& c : cls) {
        HallElt l = h.product(h.product(HallAlgebra::unit(a), HallAlgebra::unit(b)),
                              HallAlgebra::unit(c));
        HallElt r = h.product(HallAlgebra::unit(a),
                              h.product(HallAlgebra::unit(b), HallAlgebra::unit(c)));
        CHECK(l == r);
      }
}

TEST_CASE("quantum Serre relations for the generator images") {
  for (auto spec : {"A2: 1->2", "A2: 2->1"}) {
    HallAlgebra h(parse_quiver(spec));
    HallElt e1 = h.simple(0) * Laurent::u(-1);
    HallElt e2 = h.simple(1) * Laurent::u(-1);
    HallElt s = h.product(h.product(e1, e1), e2) -
                h.product(h.product(e1, e2), e1) * qint(2) + h.product(h.product(e2, e1), e1);
    CHECK(s.is_zero());
    HallElt s2 = h.product(h.product(e2, e2), e1) -
                 h.product(h.product(e2, e1), e2) * qint(2) + h.product(h.product(e1, e2), e2);
    CHECK(s2.is_zero());
  }
}

TEST_CASE("psi involution") {
  HallAlgebra h(parse_quiver("A2: 1->2"));
  HallElt u1 = h.simple(0);
  CHECK(h.psi(u1) == u1 * (-Laurent::v(-2)));
  // psi fixes w_{alpha_i}: on the w-basis the coefficient is bar-stable
  auto w = h.to_w_basis(h.psi(u1));
  REQUIRE(w.size() == 1);
  CHECK(w.begin()->second == Laurent::v(-2) - Laurent::one());  // bar(q - 1)
  std::vector<HallElt> elts{u1, h.simple(1), h.product(u1, h.simple(1)),
                            h.product(h.product(u1, u1), h.simple(1))};
  for (auto& x : elts) {
    CHECK(h.psi(h.psi(x)) == x);
    for (auto& y : elts) CHECK(h.psi(h.product(x, y)) == h.product(h.psi(x), h.psi(y)));
  }
}

TEST_CASE("bar involution") {
  HallAlgebra h(parse_quiver("A2: 1->2"));
  HallElt u1 = h.simple(0), u2 = h.simple(1);
  CHECK(h.bar(u1) == u1 * Laurent::v(-1));
  std::vector<HallElt> elts{u1, u2, h.product(u1, u2), h.product(u2, u1),
                            h.product(h.product(u1, u1), u2)};
  for (auto& x : elts) {
    CHECK(h.bar(h.bar(x)) == x);
    for (auto& y : elts) CHECK(h.bar(h.product(x, y)) == h.product(h.bar(y), h.bar(x)));
  }
  // rank 1: bar fixes every rescaled U_{ma}
  HallAlgebra a1(parse_quiver("A1:"));
  for (int m = 1; m <= 5; ++m) {
    HallElt um = a1.u_rescaled(KSClass{{0, m}});
    CHECK(um.c.at(KSClass{{0, m}}) == Laurent::u(-m * m));  // v^{-m^2/2}
    CHECK(a1.bar(um) == um);
  }
}

TEST_CASE("rescaled bases") {
  HallAlgebra h(parse_quiver("A2: 1->2"));
  KSClass s1 = h.simple_class(0);
  CHECK(h.e_exponent(s1) == Laurent::one());  // dim End = dim = 1
  KSClass semi = s1;
  auto s2 = h.simple_class(1);
  semi.insert(s2.begin(), s2.end());
  // dim End(S1+S2) = 2, <l,l> = 1: exponent -2 + 1/2 = -3/2
  CHECK(h.u_rescale_factor(semi) == Laurent::u(-3));
}

TEST_CASE("hopf pairing") {
  HallAlgebra h(parse_quiver("A1:"));
  HallElt u = h.simple(0);
  CHECK(h.hopf_pair(u, u) == Laurent::v(2) - Laurent::one());  // a_S = q - 1
  HallElt f = u * Laurent::u(-1);
  CHECK(h.hopf_pair(f, f) == Laurent::v(1) - Laurent::v(-1));
  HallAlgebra h2(parse_quiver("A2: 1->2"));
  CHECK(h2.hopf_pair(h2.simple(0), h2.simple(1)).is_zero());
}

TEST_CASE("interpolation against held-out primes") {
  HallAlgebra h(parse_quiver("A2: 1->2"));
  KSClass s1 = h.simple_class(0), s2 = h.simple_class(1);
  auto small = h.g_table_with_primes(s1, s2, {2, 3, 5, 7});
  auto large = h.g_table_with_primes(s1, s2, {11, 13, 17, 19});
  CHECK(small == large);
  // evaluating the count part at a held-out prime matches a direct census
  long held = 23;
  const IndecTable& t = h.table(held);
  auto census = ext_census(t, s1, s2);
  int hm = h.hom_mn(s1, s2) >= 0 ? static_cast<int>(h.hom_mn(s1, s2)) : 0;
  for (auto& [cls, g] : small) {
    Laurent count = g * Laurent::u(-2 * static_cast<int>(h.euler_mn(s1, s2)) + 4 * hm);
    Rational at_held = count.eval_rational(held);  // pure q-polynomial
    auto it = census.find(cls);
    CHECK(at_held == Rational(it == census.end() ? BigInt(0) : it->second));
  }
}

TEST_CASE("orientation transport") {
  HallAlgebra a(parse_quiver("A2: 1->2")), b(parse_quiver("A2: 2->1"));
  HallElt e1 = a.simple(0), e2 = a.simple(1);
  // generator-determined map: check it preserves products
  for (auto& x : {e1, e2, a.product(e1, e2), a.product(e2, e1)})
    for (auto& y : {e1, e2}) {
      HallElt fx = a.fourier(x, b), fy = a.fourier(y, b);
      CHECK(a.fourier(a.product(x, y), b) == b.product(fx, fy));
    }
  // round trip is the identity
  HallElt z = a.product(a.product(e1, e2), e1);
  CHECK(b.fourier(a.fourier(z, b), a) == z);
}
