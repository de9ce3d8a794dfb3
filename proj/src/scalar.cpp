#include "qhall/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qhall {

void Laurent::trim() {
  for (auto it = coeff_.begin(); it != coeff_.end();) {
    if (it->second == 0)
      it = coeff_.erase(it);
    else
      ++it;
  }
}

bool Laurent::is_one() const {
  return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

int Laurent::min_exp() const {
  if (coeff_.empty()) throw std::logic_error("min_exp of zero");
  return coeff_.begin()->first;
}

int Laurent::max_exp() const {
  if (coeff_.empty()) throw std::logic_error("max_exp of zero");
  return coeff_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (auto& [e, c] : o.coeff_) {
    auto [it, fresh] = coeff_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeff_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (auto& [e, c] : o.coeff_) {
    auto [it, fresh] = coeff_.try_emplace(e, Rational(-c));
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) coeff_.erase(it);
    }
  }
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (auto& [e1, c1] : coeff_)
    for (auto& [e2, c2] : o.coeff_) r.coeff_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (auto& [e, c] : coeff_) r.coeff_[e] = Rational(-c);
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (auto& [e, c] : coeff_) r.coeff_[-e] = c;
  return r;
}

Laurent Laurent::negate_u() const {
  Laurent r;
  for (auto& [e, c] : coeff_) r.coeff_[e] = (e % 2 == 0) ? c : Rational(-c);
  r.trim();
  return r;
}

Laurent Laurent::scale(const Rational& c) const {
  Laurent r;
  if (c == 0) return r;
  for (auto& [e, co] : coeff_) r.coeff_[e] = c * co;
  return r;
}

std::optional<Laurent> Laurent::divide(const Laurent& d) const {
  if (d.is_zero()) throw std::invalid_argument("division by zero");
  if (is_zero()) return Laurent();
  // shift both to ordinary polynomials in u, divide, shift back
  const int sa = min_exp(), sd = d.min_exp();
  Laurent rem = *this * Laurent::u(-sa);
  Laurent div = d * Laurent::u(-sd);
  Laurent quot;
  const int dlead = div.max_exp();
  const Rational& dc = div.coeffs().rbegin()->second;
  while (!rem.is_zero() && rem.max_exp() >= dlead) {
    Laurent t = Laurent::term(rem.coeffs().rbegin()->second / dc, rem.max_exp() - dlead);
    quot += t;
    rem -= t * div;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot * Laurent::u(sa - sd);
}

Laurent Laurent::divide_or_throw(const Laurent& d, const char* what) const {
  auto r = divide(d);
  if (!r) throw std::runtime_error(what);
  return *r;
}

Laurent Laurent::pow(int n) const {
  if (n < 0) {
    if (!is_monomial()) throw std::invalid_argument("negative power of non-monomial");
    auto& [e, c] = *coeff_.begin();
    return term(Rational(1) / c, -e).pow(-n);
  }
  Laurent r = one();
  Laurent base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool Laurent::has_integer_coeffs() const {
  for (auto& [e, c] : coeff_)
    if (denominator(c) != 1) return false;
  return true;
}

bool Laurent::is_v_polynomial() const {
  for (auto& [e, c] : coeff_)
    if (e % 2 != 0) return false;
  return true;
}

bool Laurent::in_vminus_ring() const {
  if (!has_integer_coeffs()) return false;
  for (auto& [e, c] : coeff_)
    if (e >= 0 || e % 2 != 0) return false;
  return true;
}

bool Laurent::in_vplus_ring() const {
  if (!has_integer_coeffs()) return false;
  for (auto& [e, c] : coeff_)
    if (e <= 0 || e % 2 != 0) return false;
  return true;
}

bool Laurent::has_nonneg_coeffs() const {
  for (auto& [e, c] : coeff_)
    if (c < 0) return false;
  return true;
}

namespace {
// x^k for rational x, integer k (x != 0 when k < 0)
Rational rat_pow(const Rational& x, int k) {
  bool inv = k < 0;
  if (inv) k = -k;
  Rational r = 1, base = x;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return inv ? Rational(1) / r : r;
}
}  // namespace

Laurent::PrimeEval Laurent::eval_at(long q) const {
  // v = sqrt(q); rational exactly when q is a perfect square.
  long s = static_cast<long>(std::lround(std::sqrt(static_cast<double>(q))));
  bool square = s * s == q;
  PrimeEval r{0, 0};
  for (auto& [e, c] : coeff_) {
    // u^e = v^{e/2}, with a leftover sqrt(v) when e is odd
    int k = e >= 0 ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    bool half = ((e % 2) + 2) % 2 == 1;
    Rational vpow;
    if (square) {
      vpow = rat_pow(Rational(s), k);
    } else {
      // v^k = q^{k/2}; need k even without a rational square root
      if (((k % 2) + 2) % 2 == 1)
        throw std::runtime_error("eval_at: odd power of sqrt(q) at non-square q");
      vpow = rat_pow(Rational(q), k / 2);
    }
    (half ? r.sqrt_v : r.rat) += c * vpow;
  }
  return r;
}

Rational Laurent::eval_rational(long q) const {
  PrimeEval pe = eval_at(q);
  if (!pe.is_rational()) throw std::runtime_error("eval_rational: value not rational");
  return pe.rat;
}

std::string Laurent::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
    Rational c = it->second;
    int e = it->first;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rational ac = c < 0 ? Rational(-c) : c;
    bool unit = (ac == 1) && e != 0;
    if (!unit) os << ac;
    if (e != 0) {
      if (!unit) os << "*";
      os << "v^";
      if (e % 2 == 0)
        os << e / 2;
      else
        os << "(" << e << "/2)";
    }
  }
  return os.str();
}

Laurent operator*(const Rational& c, const Laurent& x) { return x.scale(c); }

Laurent qint(int n) {
  // [n] = v^{n-1} + v^{n-3} + ... + v^{1-n}
  Laurent r;
  int m = n < 0 ? -n : n;
  for (int k = 0; k < m; ++k) r += Laurent::v(m - 1 - 2 * k);
  return n < 0 ? -r : r;
}

Laurent qfact(int n) {
  Laurent r = Laurent::one();
  for (int i = 1; i <= n; ++i) r *= qint(i);
  return r;
}

Laurent qbinom(int n, int k) {
  if (k < 0) return Laurent::zero();
  Laurent num = Laurent::one();
  for (int i = 0; i < k; ++i) num *= qint(n - i);
  return num.divide_or_throw(qfact(k), "qbinom: inexact division");
}

BigInt binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPolynomial::eval(const Rational& q) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

Laurent QPolynomial::to_laurent() const {
  Laurent r;
  for (size_t k = 0; k < c_.size(); ++k) r += Laurent::term(c_[k], 4 * static_cast<int>(k));
  return r;
}

std::string QPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[k];
    if (k > 0) os << "*q^" << k;
  }
  return os.str();
}

QPolynomial interpolate_q(const std::vector<std::pair<long, Rational>>& samples,
                          int degree_cap) {
  if (static_cast<int>(samples.size()) < degree_cap + 1)
    throw std::invalid_argument("interpolate_q: not enough samples");
  // Lagrange interpolation on the first degree_cap+1 samples.
  size_t m = static_cast<size_t>(degree_cap) + 1;
  std::vector<Rational> acc(m, 0);
  for (size_t i = 0; i < m; ++i) {
    // basis polynomial prod_{j!=i} (q - x_j)/(x_i - x_j)
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      denom *= Rational(samples[i].first - samples[j].first);
      std::vector<Rational> next(basis.size() + 1, 0);
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * samples[j].first;
      }
      basis = std::move(next);
    }
    Rational scale = samples[i].second / denom;
    for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  QPolynomial p(acc);
  for (auto& [x, y] : samples)
    if (p.eval(x) != y) throw std::runtime_error("interpolation instability");
  return p;
}

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  // gcd up to a unit (monomial times rational); operate on shifted polys
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Laurent x = a * Laurent::u(-a.min_exp());
  Laurent y = b * Laurent::u(-b.min_exp());
  while (!y.is_zero()) {
    // remainder of x by y as polynomials in u
    Laurent r = x;
    const int dl = y.max_exp();
    const Rational& dc = y.coeffs().rbegin()->second;
    while (!r.is_zero() && r.max_exp() >= dl) {
      Rational c = r.coeffs().rbegin()->second / dc;
      r -= Laurent::term(c, r.max_exp() - dl) * y;
    }
    x = y;
    y = r.is_zero() ? r : r * Laurent::u(-r.min_exp());
  }
  return x;
}

Frac::Frac(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::invalid_argument("Frac: zero denominator");
  normalize();
}

void Frac::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent::one();
    return;
  }
  Laurent g = laurent_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divide_or_throw(g, "Frac normalize");
    den_ = den_.divide_or_throw(g, "Frac normalize");
  }
  // make denominator have min exponent 0 and unit leading rational
  int sh = den_.min_exp();
  if (sh != 0) {
    num_ *= Laurent::u(-sh);
    den_ *= Laurent::u(-sh);
  }
  Rational lead = den_.coeffs().begin()->second;
  if (lead != 1) {
    num_ = num_.scale(Rational(1) / lead);
    den_ = den_.scale(Rational(1) / lead);
  }
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Frac Frac::operator-(const Frac& o) const {
  return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
Frac Frac::operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }
Frac Frac::operator/(const Frac& o) const {
  if (o.is_zero()) throw std::invalid_argument("Frac: division by zero");
  return Frac(num_ * o.den_, den_ * o.num_);
}
Frac Frac::operator-() const { return Frac(-num_, den_); }

bool Frac::operator==(const Frac& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

std::optional<Laurent> Frac::to_laurent() const {
  if (num_.is_zero()) return Laurent();
  return num_.divide(den_);
}

Laurent Frac::to_laurent_or_throw(const char* what) const {
  auto l = to_laurent();
  if (!l) throw std::runtime_error(what);
  return *l;
}

std::string Frac::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qhall
