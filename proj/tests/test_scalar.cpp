#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qhall/scalar.hpp"

using namespace qhall;

namespace {
Laurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5), terms(0, 5);
  Laurent r;
  int n = terms(rng);
  for (int i = 0; i < n; ++i) r += Laurent::term(Rational(num(rng), den(rng)), exp(rng));
  return r;
}
}  // namespace

TEST_CASE("laurent basics") {
  Laurent a = Laurent::v(1) + Laurent::v(-1);
  CHECK(a.coeff(2) == 1);
  CHECK(a.coeff(-2) == 1);
  CHECK(a.coeff(0) == 0);
  CHECK((a - a).is_zero());
  CHECK(Laurent::q(1) == Laurent::v(2));
  CHECK(Laurent::v(1) * Laurent::v(-1) == Laurent::one());
  CHECK((a * a) == Laurent::v(2) + Laurent(2, 1) + Laurent::v(-2));
  CHECK(a.pow(0).is_one());
  CHECK(a.pow(3) == a * a * a);
  CHECK(Laurent::u(3).pow(-2) == Laurent::u(-6));
}

TEST_CASE("bar involution") {
  CHECK(Laurent::u(1).bar() == Laurent::u(-1));      // bar(v^{1/2}) = v^{-1/2}
  CHECK(Laurent::one().bar() == Laurent::one());
  Laurent x = Laurent::v(1) - Laurent::v(-1);
  CHECK(x.bar() == -x);                              // bar(v - v^{-1}) = v^{-1} - v
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a + b).bar() == a.bar() + b.bar());
    CHECK((a * b).bar() == a.bar() * b.bar());
  }
}

TEST_CASE("negate_u is the sign twist on odd exponents") {
  Laurent x = Laurent::u(1) + Laurent::v(1);
  CHECK(x.negate_u() == -Laurent::u(1) + Laurent::v(1));
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    CHECK(a.negate_u().negate_u() == a);
    CHECK((a * b).negate_u() == a.negate_u() * b.negate_u());
  }
}

TEST_CASE("exact division") {
  Laurent p = (Laurent::v(1) + Laurent::v(-1)) * (Laurent::v(2) - Laurent::one());
  auto d = p.divide(Laurent::v(1) + Laurent::v(-1));
  REQUIRE(d.has_value());
  CHECK(*d == Laurent::v(2) - Laurent::one());
  CHECK(!(p + Laurent::one()).divide(Laurent::v(1) + Laurent::v(-1)).has_value());
  CHECK(Laurent::zero().divide(p).has_value());
  CHECK_THROWS(static_cast<void>(p.divide(Laurent::zero())));
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    Laurent a = random_laurent(rng), b = random_laurent(rng);
    if (b.is_zero()) continue;
    auto quot = (a * b).divide(b);
    REQUIRE(quot.has_value());
    CHECK(*quot == a);
  }
}

TEST_CASE("ring membership predicates") {
  CHECK((Laurent::v(-1) + Laurent::v(-3)).in_vminus_ring());
  CHECK(!Laurent::one().in_vminus_ring());
  CHECK(!Laurent::u(-1).in_vminus_ring());
  CHECK((Laurent::v(2)).in_vplus_ring());
  CHECK(!(Laurent::v(2) + Laurent::one()).in_vplus_ring());
  CHECK(Laurent::v(5).is_v_polynomial());
  CHECK(!Laurent::u(1).is_v_polynomial());
  CHECK(Laurent(1, 2).has_integer_coeffs() == false);
  CHECK((Laurent::v(1) - Laurent::v(-1)).has_nonneg_coeffs() == false);
  Laurent mixed = Laurent::v(1) + Laurent::v(-2);
  CHECK(mixed.filter([](int e) { return e > 0; }) == Laurent::v(1));
}

TEST_CASE("quantum integers and binomials") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2) == Laurent::v(1) + Laurent::v(-1));
  CHECK(qint(-2) == -qint(2));
  CHECK(qint(3) == Laurent::v(2) + Laurent::one() + Laurent::v(-2));
  CHECK(qfact(3) == qint(1) * qint(2) * qint(3));
  CHECK(qbinom(4, 2) == qfact(4).divide_or_throw(qfact(2) * qfact(2)));
  CHECK(qbinom(5, 0).is_one());
  CHECK(qbinom(3, -1).is_zero());
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      Laurent b = qbinom(n, k);
      CHECK(b.bar() == b);
      CHECK(b.eval_rational(1) == Rational(binom(n, k)));
    }
  CHECK(binom(6, 3) == 20);
  CHECK(binom(4, 7) == 0);
}

TEST_CASE("evaluation at q") {
  // v^3 + v at q = 4 (v = 2) -> 10
  CHECK((Laurent::v(3) + Laurent::v(1)).eval_rational(4) == 10);
  // v^{-1} at q = 9 -> 1/3
  CHECK(Laurent::v(-1).eval_rational(9) == Rational(1, 3));
  // v^{1/2} at q = 2 -> sqrt(v) coefficient 1, flagged non-rational
  auto pe = Laurent::u(1).eval_at(2);
  CHECK(pe.rat == 0);
  CHECK(pe.sqrt_v == 1);
  CHECK(!pe.is_rational());
  CHECK_THROWS(static_cast<void>(Laurent::u(1).eval_rational(2)));
  // v at q = 2 is irrational and unsupported without a square
  CHECK_THROWS(static_cast<void>(Laurent::v(1).eval_at(2)));
  // q-powers evaluate at any q
  CHECK((Laurent::q(2) + Laurent::q(-1)).eval_rational(3) == Rational(9) + Rational(1, 3));
}

TEST_CASE("q polynomial interpolation") {
  QPolynomial p = interpolate_q({{2, 3}, {3, 8}, {5, 24}}, 2);
  CHECK(p == QPolynomial({-1, 0, 1}));  // q^2 - 1
  CHECK(p.to_laurent() == Laurent::q(2) - Laurent::one());
  QPolynomial c = interpolate_q({{2, 1}, {3, 1}, {5, 1}}, 2);
  CHECK(c == QPolynomial({1}));
  CHECK(c.degree() == 0);
  // overdetermined consistent set
  QPolynomial p2 = interpolate_q({{2, 3}, {3, 8}, {5, 24}, {7, 48}, {11, 120}}, 2);
  CHECK(p2 == p);
  // inconsistent overdetermined set must be rejected
  CHECK_THROWS_WITH(interpolate_q({{2, 3}, {3, 8}, {5, 24}, {7, 49}}, 2),
                    "interpolation instability");
  CHECK_THROWS(interpolate_q({{2, 3}}, 2));
}

TEST_CASE("fraction field") {
  Frac a(Laurent::v(2) - Laurent::one(), Laurent::v(1) - Laurent::v(-1));
  // (v^2 - 1)/(v - v^{-1}) = v
  CHECK(a.to_laurent_or_throw() == Laurent::v(1));
  Frac b(Laurent::one(), Laurent::v(1) + Laurent::one());
  CHECK(!b.to_laurent().has_value());
  CHECK_THROWS(static_cast<void>(b.to_laurent_or_throw()));
  CHECK((b * Frac(Laurent::v(1) + Laurent::one())).to_laurent_or_throw() == Laurent::one());
  Frac z = a - a;
  CHECK(z.is_zero());
  CHECK((a / a) == Frac(Laurent::one()));
  std::mt19937 rng(19);
  for (int i = 0; i < 30; ++i) {
    Laurent x = random_laurent(rng), y = random_laurent(rng), w = random_laurent(rng);
    if (y.is_zero() || w.is_zero()) continue;
    Frac f(x, y), g(x * w, y * w);
    CHECK(f == g);  // normalization-independent equality
    CHECK(f + Frac() == f);
    CHECK((f - f).is_zero());
    CHECK(f.bar().bar() == f);
  }
  CHECK_THROWS(Frac(Laurent::one(), Laurent::zero()));
}
