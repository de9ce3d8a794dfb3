#include "qhall/hall.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qhall {

namespace {
const std::vector<long> kPrimes{2,  3,  5,  7,  11, 13, 17, 19,
                                23, 29, 31, 37, 41, 43, 47, 53};
}

HallElt& HallElt::operator+=(const HallElt& o) {
  for (auto& [k, x] : o.c) {
    auto it = c.find(k);
    if (it == c.end())
      c.emplace(k, x);
    else {
      it->second += x;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  return *this;
}

HallElt& HallElt::operator-=(const HallElt& o) {
  for (auto& [k, x] : o.c) {
    auto it = c.find(k);
    if (it == c.end())
      c.emplace(k, -x);
    else {
      it->second -= x;
      if (it->second.is_zero()) c.erase(it);
    }
  }
  return *this;
}

HallElt HallElt::operator*(const Laurent& s) const {
  HallElt r;
  if (s.is_zero()) return r;
  for (auto& [k, x] : c) r.c.emplace(k, x * s);
  return r;
}

void HallElt::trim() {
  for (auto it = c.begin(); it != c.end();)
    it = it->second.is_zero() ? c.erase(it) : std::next(it);
}

HallAlgebra::HallAlgebra(Quiver shape, long census_cap)
    : shape_(std::move(shape)), census_cap_(census_cap), roots_(positive_roots(shape_)) {}

const IndecTable& HallAlgebra::table(long p) {
  auto it = tables_.find(p);
  if (it == tables_.end()) {
    it = tables_.emplace(p, build_indecomposables(shape_, p)).first;
    if (it->second.roots != roots_) throw std::logic_error("root order drift");
  }
  return it->second;
}

long HallAlgebra::hom_mn(const KSClass& m, const KSClass& n) {
  auto dims = [&](long p) {
    const IndecTable& t = table(p);
    long r = 0;
    for (auto& [b, mb] : m)
      for (auto& [g, mg] : n) r += static_cast<long>(mb) * mg * t.hom[b][g];
    return r;
  };
  long h = dims(2);
  if (h != dims(3)) throw std::logic_error("Hom dimension is not generic");
  return h;
}

long HallAlgebra::dim_total(const KSClass& m) const {
  long r = 0;
  for (auto& [b, mb] : m)
    for (int i = 0; i < shape_.n; ++i) r += static_cast<long>(mb) * roots_[b][i];
  return r;
}

IntVec HallAlgebra::class_dim(const KSClass& m) const {
  IntVec d(shape_.n, 0);
  for (auto& [b, mb] : m)
    for (int i = 0; i < shape_.n; ++i) d[i] += mb * roots_[b][i];
  return d;
}

long HallAlgebra::euler_mn(const KSClass& m, const KSClass& n) const {
  return euler_form(shape_, class_dim(m), class_dim(n));
}

Laurent HallAlgebra::a_laurent(const KSClass& m) {
  long dim_e = dim_end(m), sum_sq = 0;
  Laurent r = Laurent::one();
  for (auto& [b, mult] : m) {
    sum_sq += static_cast<long>(mult) * mult;
    // |GL_m| = prod_{k<m} (q^m - q^k)
    for (int k = 0; k < mult; ++k) r *= Laurent::q(mult) - Laurent::q(k);
  }
  return r * Laurent::q(static_cast<int>(dim_e - sum_sq));
}

std::map<KSClass, Laurent> HallAlgebra::g_table_with_primes(
    const KSClass& mu, const KSClass& nu, const std::vector<long>& primes) {
  if (primes.size() < 2) throw std::invalid_argument("need at least two primes");
  long h = -1, e = -1;
  std::map<KSClass, std::vector<std::pair<long, Rational>>> samples;
  for (long p : primes) {
    const IndecTable& t = table(p);
    FqRep mx = t.rep_of(mu), mz = t.rep_of(nu);
    long hp = hom_dim(shape_, p, mx, mz);
    long ep = ext_dim(shape_, p, mx, mz);
    if (h < 0) {
      h = hp;
      e = ep;
    } else if (h != hp || e != ep) {
      throw std::logic_error("Hom/Ext dimensions are not generic");
    }
    for (auto& [cls, count] : ext_census(t, mu, nu, census_cap_))
      samples[cls].emplace_back(p, Rational(count));
  }
  if (static_cast<long>(primes.size()) < e + 1)
    throw std::runtime_error("not enough primes for the interpolation degree");
  std::map<KSClass, Laurent> out;
  // fixed twist v^{<mu,nu>} and the 1/|Hom| = q^{-h} shift
  Laurent twist = Laurent::u(static_cast<int>(2 * euler_mn(mu, nu) - 4 * h));
  for (auto& [cls, pts] : samples) {
    auto full = pts;
    for (long p : primes)
      if (std::none_of(pts.begin(), pts.end(), [&](auto& s) { return s.first == p; }))
        full.emplace_back(p, 0);
    std::sort(full.begin(), full.end());
    QPolynomial count = interpolate_q(full, static_cast<int>(e));
    Laurent g = count.to_laurent() * twist;
    if (!g.has_integer_coeffs())
      throw std::logic_error("structure constant with non-integer coefficients");
    if (!g.is_zero()) out[cls] = g;
  }
  return out;
}

const std::map<KSClass, Laurent>& HallAlgebra::g_table(const KSClass& mu,
                                                       const KSClass& nu) {
  auto key = std::make_pair(mu, nu);
  auto it = g_memo_.find(key);
  if (it != g_memo_.end()) return it->second;
  // sample dim Ext + 2 primes; escalate once on instability
  const IndecTable& t = table(2);
  long e = ext_dim(shape_, 2, t.rep_of(mu), t.rep_of(nu));
  for (int attempt = 0;; ++attempt) {
    size_t need = static_cast<size_t>(e) + 2 + 2 * attempt;
    if (need > kPrimes.size()) throw std::runtime_error("interpolation instability");
    std::vector<long> primes(kPrimes.begin(), kPrimes.begin() + need);
    try {
      auto tab = g_table_with_primes(mu, nu, primes);
      return g_memo_.emplace(key, std::move(tab)).first->second;
    } catch (const std::runtime_error& err) {
      if (std::string(err.what()) != "interpolation instability" || attempt >= 2) throw;
    }
  }
}

HallElt HallAlgebra::unit(const KSClass& cls) {
  HallElt r;
  r.c.emplace(cls, Laurent::one());
  return r;
}

KSClass HallAlgebra::simple_class(int vertex) const {
  IntVec e(shape_.n, 0);
  e[vertex] = 1;
  auto it = std::find(roots_.begin(), roots_.end(), e);
  if (it == roots_.end()) throw std::logic_error("missing simple root");
  return {{static_cast<int>(it - roots_.begin()), 1}};
}

HallElt HallAlgebra::simple(int vertex) const { return unit(simple_class(vertex)); }

HallElt HallAlgebra::product(const HallElt& x, const HallElt& y) {
  HallElt r;
  for (auto& [mu, cx] : x.c)
    for (auto& [nu, cy] : y.c) {
      Laurent f = cx * cy;
      for (auto& [lam, g] : g_table(mu, nu)) {
        auto it = r.c.find(lam);
        if (it == r.c.end())
          r.c.emplace(lam, f * g);
        else
          it->second += f * g;
      }
    }
  r.trim();
  return r;
}

HallElt HallAlgebra::word_product(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  auto it = word_memo_.find(w);
  if (it != word_memo_.end()) return it->second;
  HallElt r = simple(w[0]);
  for (size_t i = 1; i < w.size(); ++i) r = product(r, simple(w[i]));
  return word_memo_.emplace(w, std::move(r)).first->second;
}

std::vector<Word> HallAlgebra::words_of_dim(const IntVec& d) const {
  std::vector<Word> out;
  Word cur;
  IntVec left = d;
  long total = 0;
  for (int x : d) total += x;
  std::function<void()> rec = [&]() {
    if (static_cast<long>(cur.size()) == total) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < shape_.n; ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back(i);
      rec();
      cur.pop_back();
      ++left[i];
    }
  };
  rec();
  return out;
}

std::vector<HallAlgebra::PivotRow>& HallAlgebra::word_span(const IntVec& d) {
  auto it = span_memo_.find(d);
  if (it != span_memo_.end()) return it->second;
  std::vector<PivotRow> rows;
  for (const Word& w : words_of_dim(d)) {
    HallElt pe = word_product(w);
    std::map<KSClass, Frac> vec;
    for (auto& [k, x] : pe.c) vec.emplace(k, Frac(x));
    std::map<Word, Frac> expr{{w, Frac(Laurent::one())}};
    // reduce against existing rows
    for (auto& row : rows) {
      auto f = vec.find(row.pivot);
      if (f == vec.end()) continue;
      Frac c = f->second;
      for (auto& [k, x] : row.vec) {
        vec[k] -= c * x;
        if (vec[k].is_zero()) vec.erase(k);
      }
      for (auto& [ww, x] : row.expr) {
        expr[ww] -= c * x;
        if (expr[ww].is_zero()) expr.erase(ww);
      }
    }
    if (vec.empty()) continue;
    PivotRow nr;
    nr.pivot = vec.begin()->first;
    Frac lead = vec.begin()->second;
    for (auto& [k, x] : vec) nr.vec.emplace(k, x / lead);
    for (auto& [ww, x] : expr) nr.expr.emplace(ww, x / lead);
    // keep the span fully reduced
    for (auto& row : rows) {
      auto f = row.vec.find(nr.pivot);
      if (f == row.vec.end()) continue;
      Frac c = f->second;
      for (auto& [k, x] : nr.vec) {
        row.vec[k] -= c * x;
        if (row.vec[k].is_zero()) row.vec.erase(k);
      }
      for (auto& [ww, x] : nr.expr) {
        row.expr[ww] -= c * x;
        if (row.expr[ww].is_zero()) row.expr.erase(ww);
      }
    }
    rows.push_back(std::move(nr));
  }
  return span_memo_.emplace(d, std::move(rows)).first->second;
}

WordCombo HallAlgebra::monomial_expression(const KSClass& cls) {
  IntVec d = class_dim(cls);
  auto& rows = word_span(d);
  std::map<KSClass, Frac> t{{cls, Frac(Laurent::one())}};
  std::map<Word, Frac> combo;
  for (auto& row : rows) {
    auto f = t.find(row.pivot);
    if (f == t.end()) continue;
    Frac c = f->second;
    for (auto& [k, x] : row.vec) {
      t[k] -= c * x;
      if (t[k].is_zero()) t.erase(k);
    }
    for (auto& [w, x] : row.expr) {
      combo[w] += c * x;
      if (combo[w].is_zero()) combo.erase(w);
    }
  }
  if (!t.empty()) throw std::runtime_error("class not generated by simple words");
  return {combo.begin(), combo.end()};
}

namespace {
HallElt extract_laurent(const std::map<KSClass, Frac>& acc, const char* what) {
  HallElt r;
  for (auto& [k, f] : acc) {
    if (f.is_zero()) continue;
    r.c.emplace(k, f.to_laurent_or_throw(what));
  }
  return r;
}
}  // namespace

HallElt HallAlgebra::psi(const HallElt& x) {
  HallElt out;
  for (auto& [cls, coeff] : x.c) {
    auto it = psi_memo_.find(cls);
    if (it == psi_memo_.end()) {
      std::map<KSClass, Frac> acc;
      for (auto& [w, f] : monomial_expression(cls)) {
        // psi(u_{a_i}) = -v^{-2} u_{a_i}
        Laurent fac = Laurent::term(((w.size() % 2) ? -1 : 1), -4 * static_cast<int>(w.size()));
        Frac scale = f.bar() * Frac(fac);
        for (auto& [k, c] : word_product(w).c) acc[k] += scale * Frac(c);
      }
      it = psi_memo_.emplace(cls, extract_laurent(acc, "psi: non-Laurent image")).first;
    }
    out += it->second * coeff.bar();
  }
  out.trim();
  return out;
}

HallElt HallAlgebra::bar(const HallElt& x) {
  HallElt out;
  for (auto& [cls, coeff] : x.c) {
    auto it = bar_memo_.find(cls);
    if (it == bar_memo_.end()) {
      std::map<KSClass, Frac> acc;
      for (auto& [w, f] : monomial_expression(cls)) {
        Word rev(w.rbegin(), w.rend());
        Frac scale = f.bar() * Frac(Laurent::v(-static_cast<int>(w.size())));
        for (auto& [k, c] : word_product(rev).c) acc[k] += scale * Frac(c);
      }
      it = bar_memo_.emplace(cls, extract_laurent(acc, "bar: non-Laurent image")).first;
    }
    out += it->second * coeff.bar();
  }
  out.trim();
  return out;
}

Laurent HallAlgebra::e_exponent(const KSClass& cls) {
  return Laurent::v(static_cast<int>(dim_end(cls) - dim_total(cls)));
}

Laurent HallAlgebra::u_rescale_factor(const KSClass& cls) {
  // v^{-dim End + <l,l>/2} as u^{-2 dim End + <l,l>}
  return Laurent::u(static_cast<int>(-2 * dim_end(cls) + euler_mn(cls, cls)));
}

HallElt HallAlgebra::u_rescaled(const KSClass& cls) {
  return unit(cls) * u_rescale_factor(cls);
}

std::map<KSClass, Laurent> HallAlgebra::to_w_basis(const HallElt& x) {
  std::map<KSClass, Laurent> out;
  for (auto& [k, c] : x.c) out.emplace(k, c * a_laurent(k));
  return out;
}

HallElt HallAlgebra::from_w_basis(const std::map<KSClass, Laurent>& w) {
  HallElt r;
  for (auto& [k, c] : w) {
    if (c.is_zero()) continue;
    r.c.emplace(k, c.divide_or_throw(a_laurent(k), "w-basis conversion is not Laurent"));
  }
  return r;
}

Laurent HallAlgebra::hopf_pair(const HallElt& x, const HallElt& y) {
  Laurent r;
  for (auto& [k, cx] : x.c) {
    auto it = y.c.find(k);
    if (it != y.c.end()) r += cx * it->second * a_laurent(k);
  }
  return r;
}

HallElt HallAlgebra::fourier(const HallElt& x, HallAlgebra& target) {
  std::map<KSClass, Frac> acc;
  for (auto& [cls, coeff] : x.c)
    for (auto& [w, f] : monomial_expression(cls)) {
      Frac scale = Frac(coeff) * f;
      for (auto& [k, c] : target.word_product(w).c) acc[k] += scale * Frac(c);
    }
  return extract_laurent(acc, "orientation transport: non-Laurent image");
}

std::string HallAlgebra::elt_str(const HallElt& x) {
  if (x.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : x.c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*u[" << table(2).class_str(k) << "]";
  }
  return os.str();
}

}  // namespace qhall
