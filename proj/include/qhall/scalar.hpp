#pragma once

// Exact coefficient arithmetic: Laurent polynomials in the half-power
// variable u = v^{1/2} over the rationals, plain polynomials in q = v^2,
// and a small fraction field used by the linear solvers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhall {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in u = v^{1/2}; exponents are integers of u,
// so v^k is exponent 2k and q^k is exponent 4k.
class Laurent {
public:
  Laurent() = default;
  explicit Laurent(const Rational& c) {
    if (c != 0) coeff_[0] = c;
  }
  Laurent(long num, long den) : Laurent(Rational(num, den)) {}

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Rational(1)); }
  // c * u^e
  static Laurent term(const Rational& c, int e) {
    Laurent r;
    if (c != 0) r.coeff_[e] = c;
    return r;
  }
  static Laurent u(int e) { return term(1, e); }
  static Laurent v(int e) { return term(1, 2 * e); }
  static Laurent q(int e) { return term(1, 4 * e); }

  bool is_zero() const { return coeff_.empty(); }
  bool is_one() const;
  // single term c*u^e?
  bool is_monomial() const { return coeff_.size() == 1; }
  const std::map<int, Rational>& coeffs() const { return coeff_; }
  Rational coeff(int e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? Rational(0) : it->second;
  }
  int min_exp() const;
  int max_exp() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const { Laurent r = *this; return r += o; }
  Laurent operator-(const Laurent& o) const { Laurent r = *this; return r -= o; }
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const Laurent& o) const { return coeff_ != o.coeff_; }
  bool operator<(const Laurent& o) const { return coeff_ < o.coeff_; }

  // u -> u^{-1}
  Laurent bar() const;
  // substitute u -> -u (parity twist, used by the psi involution)
  Laurent negate_u() const;
  Laurent scale(const Rational& c) const;

  // Exact division; nullopt if the remainder is nonzero.
  std::optional<Laurent> divide(const Laurent& d) const;
  Laurent divide_or_throw(const Laurent& d, const char* what = "inexact Laurent division") const;
  Laurent pow(int n) const;  // n >= 0, or any n for monomials

  bool has_integer_coeffs() const;
  // all u-exponents even (element of Q[v,v^-1])
  bool is_v_polynomial() const;
  // member of v^{-1}Z[v^{-1}] (strictly negative even exponents, integer coeffs)
  bool in_vminus_ring() const;
  // member of vZ[v]
  bool in_vplus_ring() const;
  // all coefficients nonnegative
  bool has_nonneg_coeffs() const;
  // keep only exponents with pred(e) true
  template <class Pred>
  Laurent filter(Pred pred) const {
    Laurent r;
    for (auto& [e, c] : coeff_)
      if (pred(e)) r.coeff_[e] = c;
    return r;
  }

  // Evaluation at q, with v = sqrt(q).  When q is a perfect square the
  // value of v is rational; odd u-exponents contribute to the sqrt(v)
  // coefficient and are flagged non-rational.
  struct PrimeEval {
    Rational rat;      // rational part
    Rational sqrt_v;   // coefficient of sqrt(v)
    bool is_rational() const { return sqrt_v == 0; }
    bool operator==(const PrimeEval&) const = default;
  };
  PrimeEval eval_at(long q) const;
  // Convenience: evaluation that must come out rational; throws otherwise.
  Rational eval_rational(long q) const;

  std::string str() const;  // human-readable, in terms of v^{k/2}

private:
  std::map<int, Rational> coeff_;  // u-exponent -> nonzero coefficient
  void trim();
};

Laurent operator*(const Rational& c, const Laurent& x);

// quantum integer [n], factorial and binomial in v
Laurent qint(int n);
Laurent qfact(int n);
Laurent qbinom(int n, int k);
BigInt binom(long n, long k);

// Polynomial in q with rational coefficients.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational eval(const Rational& q) const;
  Laurent to_laurent() const;  // q -> u^4
  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  std::string str() const;

private:
  std::vector<Rational> c_;  // c_[k] is the q^k coefficient
};

// Lagrange interpolation through the samples; degree <= cap.
// Throws std::runtime_error("interpolation instability") when an
// overdetermined sample set is inconsistent with a degree-cap polynomial.
QPolynomial interpolate_q(const std::vector<std::pair<long, Rational>>& samples,
                          int degree_cap);

// Rational function field Q(u); solver-internal coefficient type.
class Frac {
public:
  Frac() : num_(), den_(Laurent::one()) {}
  Frac(Laurent n) : num_(std::move(n)), den_(Laurent::one()) {}
  Frac(const Rational& c) : num_(Laurent(c)), den_(Laurent::one()) {}
  Frac(Laurent n, Laurent d);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac operator/(const Frac& o) const;
  Frac operator-() const;
  Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
  Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
  Frac& operator*=(const Frac& o) { *this = *this * o; return *this; }
  bool operator==(const Frac& o) const;

  Frac bar() const { return Frac(num_.bar(), den_.bar()); }
  // Laurent extraction; nullopt if the element is not Laurent.
  std::optional<Laurent> to_laurent() const;
  Laurent to_laurent_or_throw(const char* what = "non-Laurent coefficient") const;
  std::string str() const;

private:
  Laurent num_, den_;
  void normalize();
};

Laurent laurent_gcd(const Laurent& a, const Laurent& b);

}  // namespace qhall
