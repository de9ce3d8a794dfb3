#include "qhall/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhall {

bool Quiver::rho_is_identity() const {
  for (int i = 0; i < n; ++i)
    if (rho[i] != i) return false;
  return true;
}

bool Quiver::rho_preserves_arrows() const {
  auto has = [&](int s, int t) {
    for (auto& [a, b] : arrows)
      if (a == s && b == t) return true;
    return false;
  };
  for (auto& [s, t] : arrows)
    if (!has(rho[s], rho[t])) return false;
  return true;
}

namespace {

std::vector<std::pair<int, int>> diagram_edges(char letter, int rank) {
  std::vector<std::pair<int, int>> e;
  switch (letter) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("bad rank");
      for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("bad rank");
      for (int i = 1; i < rank - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(rank - 2, rank);
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("bad rank");
      e.emplace_back(1, 3);
      e.emplace_back(2, 4);
      for (int i = 3; i < rank; ++i) e.emplace_back(i, i + 1);
      break;
    }
    default:
      throw std::invalid_argument("unknown diagram letter");
  }
  return e;
}

void validate_shape(const Quiver& q) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::set<int>> adj(q.n);
  for (auto& [s, t] : q.arrows) {
    if (s < 0 || s >= q.n || t < 0 || t >= q.n) throw std::invalid_argument("arrow out of range");
    if (s == t) throw std::invalid_argument("loop arrow");
    auto key = std::minmax(s, t);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("parallel edges are not simply laced");
    adj[s].insert(t);
    adj[t].insert(s);
  }
  // underlying graph must be a forest (each component a tree)
  int comps = 0, visited_edges = 0;
  std::vector<int> mark(q.n, 0);
  for (int s = 0; s < q.n; ++s) {
    if (mark[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    mark[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        ++visited_edges;
        if (!mark[y]) {
          mark[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  if (static_cast<int>(q.arrows.size()) != q.n - comps)
    throw std::invalid_argument("underlying graph has a cycle");
  // acyclic orientation (topological sort)
  std::vector<int> indeg(q.n, 0);
  for (auto& [s, t] : q.arrows) ++indeg[t];
  std::vector<int> queue;
  for (int i = 0; i < q.n; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  int done = 0;
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    ++done;
    for (auto& [s, t] : q.arrows)
      if (s == x && --indeg[t] == 0) queue.push_back(t);
  }
  if (done != q.n) throw std::invalid_argument("oriented cycle");
}

void validate_rho(const Quiver& q) {
  if (static_cast<int>(q.rho.size()) != q.n) throw std::invalid_argument("rho size mismatch");
  IntMat c = cartan_matrix(q);
  for (int i = 0; i < q.n; ++i) {
    int ri = q.rho[i];
    if (ri < 0 || ri >= q.n || q.rho[ri] != i)
      throw std::invalid_argument("rho is not an involution");
    if (ri != i && c[i][ri] != 0)
      throw std::invalid_argument("rho swaps adjacent vertices");
    for (int j = 0; j < q.n; ++j)
      if (c[i][j] != c[ri][q.rho[j]])
        throw std::invalid_argument("rho does not preserve the diagram");
  }
}

}  // namespace

Quiver parse_quiver(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("missing ':' in quiver spec");
  std::string label = spec.substr(0, colon);
  // trim
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  label = trim(label);
  if (label.size() < 2) throw std::invalid_argument("bad type label");
  char letter = label[0];
  int rank = std::stoi(label.substr(1));
  if (letter != 'A' && letter != 'D' && letter != 'E')
    throw std::invalid_argument("unknown diagram letter");

  Quiver q;
  q.label = label;
  q.n = rank;
  for (int i = 1; i <= rank; ++i) q.names.push_back(std::to_string(i));
  q.rho.resize(rank);
  for (int i = 0; i < rank; ++i) q.rho[i] = i;

  std::string rest = spec.substr(colon + 1);
  std::string arrow_part = rest, rho_part;
  auto semi = rest.find(';');
  if (semi != std::string::npos) {
    arrow_part = rest.substr(0, semi);
    rho_part = trim(rest.substr(semi + 1));
  }
  // arrows: "1->2, 2->3"
  std::istringstream as(arrow_part);
  std::string tok;
  while (std::getline(as, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    auto pos = tok.find("->");
    if (pos == std::string::npos) throw std::invalid_argument("bad arrow: " + tok);
    int s = std::stoi(trim(tok.substr(0, pos)));
    int t = std::stoi(trim(tok.substr(pos + 2)));
    if (s < 1 || s > rank || t < 1 || t > rank)
      throw std::invalid_argument("arrow vertex out of range: " + tok);
    q.arrows.emplace_back(s - 1, t - 1);
  }
  // rho clause: "rho=(1 3)(2 4)"
  if (!rho_part.empty()) {
    if (rho_part.rfind("rho=", 0) != 0) throw std::invalid_argument("expected rho= clause");
    std::string cycles = rho_part.substr(4);
    size_t p = 0;
    while (p < cycles.size()) {
      if (std::isspace(static_cast<unsigned char>(cycles[p]))) { ++p; continue; }
      if (cycles[p] != '(') throw std::invalid_argument("bad rho cycles");
      auto close = cycles.find(')', p);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced rho cycle");
      std::istringstream cs(cycles.substr(p + 1, close - p - 1));
      std::vector<int> cyc;
      int x;
      while (cs >> x) cyc.push_back(x);
      if (cyc.size() == 2) {
        int a = cyc[0] - 1, b = cyc[1] - 1;
        if (a < 0 || a >= rank || b < 0 || b >= rank || a == b)
          throw std::invalid_argument("bad rho transposition");
        q.rho[a] = b;
        q.rho[b] = a;
      } else if (cyc.size() != 1) {
        throw std::invalid_argument("rho cycles must have length <= 2");
      }
      p = close + 1;
    }
  }
  // the label fixes the diagram; check the arrows match it
  auto want = diagram_edges(letter, rank);
  std::set<std::pair<int, int>> want_set;
  for (auto& [a, b] : want) want_set.insert(std::minmax(a - 1, b - 1));
  std::set<std::pair<int, int>> got;
  for (auto& [s, t] : q.arrows) got.insert(std::minmax(s, t));
  if (got != want_set)
    throw std::invalid_argument("arrows do not form the " + label + " diagram");
  validate_shape(q);
  validate_rho(q);
  return q;
}

Quiver standard_quiver(char letter, int rank) {
  Quiver q;
  q.label = std::string(1, letter) + std::to_string(rank);
  q.n = rank;
  for (int i = 1; i <= rank; ++i) q.names.push_back(std::to_string(i));
  q.rho.resize(rank);
  for (int i = 0; i < rank; ++i) q.rho[i] = i;
  for (auto& [a, b] : diagram_edges(letter, rank)) {
    int s = std::min(a, b), t = std::max(a, b);
    q.arrows.emplace_back(s - 1, t - 1);
  }
  validate_shape(q);
  return q;
}

Quiver doubled_quiver(const Quiver& q) {
  Quiver d;
  d.label = q.label + "x" + q.label;
  d.n = 2 * q.n;
  for (int i = 0; i < q.n; ++i) d.names.push_back(q.names[i]);
  for (int i = 0; i < q.n; ++i) d.names.push_back(q.names[i] + "*");
  for (auto& [s, t] : q.arrows) d.arrows.emplace_back(s, t);
  for (auto& [s, t] : q.arrows) d.arrows.emplace_back(s + q.n, t + q.n);
  d.rho.resize(d.n);
  for (int i = 0; i < q.n; ++i) {
    d.rho[i] = i + q.n;
    d.rho[i + q.n] = i;
  }
  validate_shape(d);
  validate_rho(d);
  return d;
}

IntMat cartan_matrix(const Quiver& q) {
  IntMat c(q.n, IntVec(q.n, 0));
  for (int i = 0; i < q.n; ++i) c[i][i] = 2;
  for (auto& [s, t] : q.arrows) {
    c[s][t] = -1;
    c[t][s] = -1;
  }
  return c;
}

long euler_form(const Quiver& q, const IntVec& a, const IntVec& b) {
  if (static_cast<int>(a.size()) != q.n || static_cast<int>(b.size()) != q.n)
    throw std::invalid_argument("euler_form: vector size mismatch");
  long r = 0;
  for (int i = 0; i < q.n; ++i) r += static_cast<long>(a[i]) * b[i];
  for (auto& [s, t] : q.arrows) r -= static_cast<long>(a[s]) * b[t];
  return r;
}

long sym_form(const Quiver& q, const IntVec& a, const IntVec& b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

IntVec reflect(const IntMat& cartan, int i, const IntVec& x) {
  long pair = 0;
  for (size_t j = 0; j < x.size(); ++j) pair += static_cast<long>(cartan[i][j]) * x[j];
  IntVec r = x;
  r[i] -= static_cast<int>(pair);
  return r;
}

std::vector<IntVec> positive_roots(const Quiver& q) {
  validate_shape(q);
  IntMat c = cartan_matrix(q);
  std::set<IntVec> roots;
  std::vector<IntVec> work;
  for (int i = 0; i < q.n; ++i) {
    IntVec e(q.n, 0);
    e[i] = 1;
    roots.insert(e);
    work.push_back(e);
  }
  const size_t cap = 1000;
  while (!work.empty()) {
    IntVec x = work.back();
    work.pop_back();
    for (int i = 0; i < q.n; ++i) {
      IntVec y = reflect(c, i, x);
      if (std::any_of(y.begin(), y.end(), [](int z) { return z < 0; })) continue;
      if (roots.insert(y).second) {
        work.push_back(y);
        if (roots.size() > cap)
          throw std::invalid_argument("root system is not finite: not an ADE diagram");
      }
    }
  }
  return {roots.begin(), roots.end()};
}

IntVec rho_orbit_reps(const Quiver& q) {
  IntVec reps;
  for (int i = 0; i < q.n; ++i)
    if (i <= q.rho[i]) reps.push_back(i);
  return reps;
}

IntVec restricted_generator(const Quiver& q, int i) {
  if (q.rho[i] == i) return {i};
  return {i, q.rho[i]};
}

IntVec apply_word(const IntMat& cartan, const IntVec& word, IntVec x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(cartan, *it, x);
  return x;
}

int braid_order(const Quiver& q, int i, int j) {
  if (i == j) throw std::invalid_argument("braid_order needs distinct generators");
  IntMat c = cartan_matrix(q);
  IntVec wi = restricted_generator(q, i), wj = restricted_generator(q, j);
  IntVec word = wi;
  word.insert(word.end(), wj.begin(), wj.end());
  // iterate the lattice action on the simples until it is the identity
  std::vector<IntVec> cur(q.n);
  for (int k = 0; k < q.n; ++k) {
    cur[k].assign(q.n, 0);
    cur[k][k] = 1;
  }
  for (int m = 1; m <= 12; ++m) {
    bool ident = true;
    for (int k = 0; k < q.n; ++k) {
      cur[k] = apply_word(c, word, cur[k]);
      if (!(cur[k][k] == 1 &&
            std::count(cur[k].begin(), cur[k].end(), 0) == q.n - 1))
        ident = false;
    }
    if (ident) return m;
  }
  throw std::runtime_error("braid order exceeds 12");
}

std::string dimvec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace qhall
