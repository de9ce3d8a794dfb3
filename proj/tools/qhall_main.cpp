// qhall: exact computations in Hall algebras, quantum doubles, and their
// involutive relatives, plus the named verification suites.
#include <cstdio>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qhall/canon.hpp"
#include "qhall/io.hpp"
#include "qhall/ihall.hpp"
#include "qhall/iqg.hpp"
#include "qhall/nks.hpp"
#include "qhall/verify.hpp"

using namespace qhall;
using nlohmann::json;

namespace {

// A tabular result: json payload plus flat rows for csv/latex rendering.
struct Table {
  json payload;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string g_format = "json";

void emit(const Table& t) {
  if (g_format == "json") {
    std::printf("%s\n", t.payload.dump(1).c_str());
  } else if (g_format == "csv") {
    for (size_t i = 0; i < t.columns.size(); ++i)
      std::printf("%s%s", i ? "," : "", t.columns[i].c_str());
    std::printf("\n");
    for (auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i) {
        std::string cell = r[i];
        for (auto& ch : cell)
          if (ch == ',') ch = ';';
        std::printf("%s%s", i ? "," : "", cell.c_str());
      }
      std::printf("\n");
    }
  } else {  // latex
    std::printf("\\begin{tabular}{%s}\n", std::string(t.columns.size(), 'l').c_str());
    for (size_t i = 0; i < t.columns.size(); ++i)
      std::printf("%s%s", i ? " & " : "", t.columns[i].c_str());
    std::printf(" \\\\\n\\hline\n");
    for (auto& r : t.rows) {
      for (size_t i = 0; i < r.size(); ++i)
        std::printf("%s$%s$", i ? " & " : "", r[i].c_str());
      std::printf(" \\\\\n");
    }
    std::printf("\\end{tabular}\n");
  }
}

// "A3" + --rho -> full spec string; strings with ':' pass through
std::string resolve_spec(const std::string& shape, const std::string& rho) {
  if (shape.find(':') != std::string::npos) return shape;
  Quiver q = standard_quiver(shape[0], std::stoi(shape.substr(1)));
  std::ostringstream os;
  os << shape << ": ";
  for (size_t i = 0; i < q.arrows.size(); ++i)
    os << (i ? ", " : "") << q.arrows[i].first + 1 << "->" << q.arrows[i].second + 1;
  if (!rho.empty() && rho != "id") os << "; rho=" << rho;
  return os.str();
}

json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (auto& [s, t] : q.arrows) arrows.push_back({s + 1, t + 1});
  return {{"label", q.label}, {"n", q.n}, {"arrows", arrows}, {"rho", q.rho}};
}

std::string ivec_str(const IntVec& v) { return dimvec_str(v); }

IntVec parse_ivec(const std::string& s) {
  IntVec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  return v;
}

std::vector<long> parse_lvec(const std::string& s) {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
  return v;
}

// tokens "a1 a2 a1^2": word product of simple u-elements
HallElt parse_hall_expr(HallAlgebra& h, const std::string& expr) {
  HallElt x = HallAlgebra::unit({});
  std::stringstream ss(expr);
  std::string tok;
  while (ss >> tok) {
    if (tok == "*") continue;
    int pw = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      pw = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    if (tok.size() < 2 || tok[0] != 'a')
      throw std::runtime_error("bad token '" + tok + "' (expected a<vertex>)");
    int i = std::stoi(tok.substr(1)) - 1;
    if (i < 0 || i >= h.quiver().n) throw std::runtime_error("vertex out of range: " + tok);
    for (int k = 0; k < pw; ++k) x = h.product(x, h.simple(i));
  }
  return x;
}

json hall_elt_json(HallAlgebra& h, const HallElt& x) {
  const IndecTable& t = h.table(2);
  json terms = json::array();
  for (auto& [cls, cf] : x.c) {
    json parts = json::array();
    for (auto& [r, m] : cls) parts.push_back({{"root", t.roots[r]}, {"mult", m}});
    terms.push_back({{"class", parts}, {"coeff", laurent_json(cf)}});
  }
  return terms;
}

// tokens "E1 F2 K1 Kp1", with optional ^e on K/Kp
DDElt parse_tu_expr(DoubleAlgebra& d, const std::string& expr) {
  DDElt x = d.one();
  std::stringstream ss(expr);
  std::string tok;
  while (ss >> tok) {
    if (tok == "*") continue;
    int pw = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      pw = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    DDElt g;
    if (tok.rfind("Kp", 0) == 0) {
      g = d.Kpi(std::stoi(tok.substr(2)) - 1, pw);
      pw = 1;
    } else if (tok[0] == 'K') {
      g = d.Ki(std::stoi(tok.substr(1)) - 1, pw);
      pw = 1;
    } else if (tok[0] == 'E') {
      g = d.chevE(std::stoi(tok.substr(1)) - 1);
    } else if (tok[0] == 'F') {
      g = d.chevF(std::stoi(tok.substr(1)) - 1);
    } else {
      throw std::runtime_error("bad token '" + tok + "' (expected E/F/K/Kp<vertex>)");
    }
    x = d.multiply(x, d.power(g, pw));
  }
  return x;
}

json frac_json(const Frac& f) {
  return laurent_json(f.to_laurent_or_throw("coefficient is not Laurent"));
}

json tu_elt_json(DoubleAlgebra& d, const DDElt& x) {
  const IndecTable& t = d.hall().table(2);
  json terms = json::array();
  auto side = [&](const KSClass& c) {
    json parts = json::array();
    for (auto& [r, m] : c) parts.push_back({{"root", t.roots[r]}, {"mult", m}});
    return parts;
  };
  for (auto& [m, cf] : x.c)
    terms.push_back({{"lambdaMinus", side(m.fm)},
                     {"lambdaPlus", side(m.ep)},
                     {"mu", m.mu},
                     {"nu", m.nu},
                     {"coeff", frac_json(cf)}});
  return terms;
}

Table tu_table(DoubleAlgebra& d, const json& payload, const std::vector<DDElt>& elts,
               const std::vector<std::string>& labels) {
  Table t;
  t.payload = payload;
  t.columns = {"element", "value"};
  for (size_t i = 0; i < elts.size(); ++i) {
    DDElt e = elts[i];
    t.rows.push_back({labels[i], d.str(e)});
  }
  return t;
}

int cmd_roots(const std::string& shape, const std::string& rho) {
  Quiver q = parse_quiver(resolve_spec(shape, rho));
  auto roots = positive_roots(q);
  Table t;
  t.payload = {{"quiver", quiver_json(q)}, {"roots", roots}};
  t.columns = {"root"};
  for (auto& r : roots) t.rows.push_back({ivec_str(r)});
  emit(t);
  return 0;
}

int cmd_hall_mult(const std::string& shape, const std::string& rho, const std::string& xs,
                  const std::string& ys) {
  std::string spec = resolve_spec(shape, rho);
  Cache cache;
  json key{{"module", "hall"}, {"op", "mult"}, {"shape", spec}, {"x", xs}, {"y", ys},
           {"schemaNote", "generic"}};
  json out;
  if (auto hit = cache.get(key)) {
    out = *hit;
  } else {
    HallAlgebra h(parse_quiver(spec));
    HallElt p = h.product(parse_hall_expr(h, xs), parse_hall_expr(h, ys));
    out = {{"quiver", quiver_json(h.quiver())}, {"x", xs}, {"y", ys},
           {"product", hall_elt_json(h, p)}};
    cache.put(key, out);
  }
  Table t;
  t.payload = out;
  t.columns = {"class", "coeff"};
  HallAlgebra h(parse_quiver(spec));
  for (auto& term : out.at("product")) {
    std::ostringstream cs;
    for (auto& p2 : term.at("class"))
      cs << "M" << ivec_str(p2.at("root").get<IntVec>()) << "^" << p2.at("mult").get<int>();
    t.rows.push_back({cs.str(), laurent_of_json(term.at("coeff")).str()});
  }
  emit(t);
  return 0;
}

int cmd_canon(const std::string& shape, const std::string& rho, const std::string& ds,
              bool dual) {
  HallAlgebra h(parse_quiver(resolve_spec(shape, rho)));
  IntVec d = parse_ivec(ds);
  BasisFamily f = dual ? dual_canonical_basis(h, d) : canonical_basis(h, d);
  json classes = json::array();
  for (auto& c : f.classes) classes.push_back(h.table(2).class_str(c));
  json trans = json::array();
  for (auto& row : f.trans) {
    json r = json::array();
    for (auto& x : row) r.push_back(laurent_json(x));
    trans.push_back(r);
  }
  Table t;
  t.payload = {{"degree", d}, {"dual", dual}, {"classes", classes}, {"transition", trans}};
  t.columns = {"member"};
  for (auto& c : f.classes) t.columns.push_back(std::string(c.empty() ? "1" : ""));
  for (size_t i = 0; i < f.classes.size(); ++i) t.columns[i + 1] = classes[i];
  for (size_t l = 0; l < f.trans.size(); ++l) {
    std::vector<std::string> row{classes[l]};
    for (auto& x : f.trans[l]) row.push_back(x.str());
    t.rows.push_back(row);
  }
  emit(t);
  return 0;
}

int cmd_tu_nf(const std::string& shape, const std::string& rho, const std::string& expr) {
  DoubleAlgebra d(parse_quiver(resolve_spec(shape, rho)));
  DDElt x = parse_tu_expr(d, expr);
  Table t = tu_table(d, {{"expr", expr}, {"value", tu_elt_json(d, x)}}, {x}, {expr});
  emit(t);
  return 0;
}

int cmd_tu_mult(const std::string& shape, const std::string& rho, const std::string& xs,
                const std::string& ys) {
  DoubleAlgebra d(parse_quiver(resolve_spec(shape, rho)));
  DDElt p = d.multiply(parse_tu_expr(d, xs), parse_tu_expr(d, ys));
  Table t = tu_table(d, {{"x", xs}, {"y", ys}, {"product", tu_elt_json(d, p)}}, {p},
                     {xs + " * " + ys});
  emit(t);
  return 0;
}

int cmd_tu_braid(const std::string& shape, const std::string& rho, int i,
                 const std::string& expr, bool inverse) {
  DoubleAlgebra d(parse_quiver(resolve_spec(shape, rho)));
  DDElt x = d.braid_T(i - 1, parse_tu_expr(d, expr), inverse);
  Table t = tu_table(d, {{"i", i}, {"inverse", inverse}, {"expr", expr},
                         {"image", tu_elt_json(d, x)}},
                     {x}, {expr});
  emit(t);
  return 0;
}

int cmd_tu_double_basis(const std::string& shape, const std::string& rho, int window) {
  DoubleAlgebra d(parse_quiver(resolve_spec(shape, rho)));
  int n = d.quiver().n;
  json families = json::array();
  Table t;
  t.columns = {"gammaPlus", "gammaMinus", "element"};
  std::vector<IntVec> degs{{IntVec(n, 0)}};
  // all (g+, g-) with total degree <= window
  std::vector<IntVec> all;
  {
    IntVec cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n) {
        all.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[pos] = v;
        rec(pos + 1, left - v);
      }
      cur[pos] = 0;
    };
    rec(0, window);
  }
  for (auto& gp : all)
    for (auto& gm : all) {
      int tot = 0;
      for (int v : gp) tot += v;
      for (int v : gm) tot += v;
      if (tot == 0 || tot > window) continue;
      auto fam = d.bg_double_basis(gp, gm);
      json elts = json::array();
      for (auto& x : fam.elts) {
        DDElt e = x;
        elts.push_back(tu_elt_json(d, e));
        t.rows.push_back({ivec_str(gp), ivec_str(gm), d.str(e)});
      }
      families.push_back({{"gammaPlus", gp}, {"gammaMinus", gm}, {"elements", elts}});
    }
  t.payload = {{"window", window}, {"families", families}};
  emit(t);
  return 0;
}

int cmd_iqg_verify(const std::string& shape, const std::string& rho) {
  IQG g(parse_quiver(resolve_spec(shape, rho)));
  g.verify_presentation();
  Table t;
  t.payload = {{"quiver", quiver_json(g.quiver())}, {"presentation", "ok"}};
  t.columns = {"presentation"};
  t.rows.push_back({"ok"});
  emit(t);
  return 0;
}

int cmd_iqg_braid(const std::string& shape, const std::string& rho,
                  const std::string& word, const std::string& gen) {
  IQG g(parse_quiver(resolve_spec(shape, rho)));
  IQGElt x;
  if (gen.rfind("B", 0) == 0) {
    x = g.B(std::stoi(gen.substr(1)) - 1);
  } else if (gen.rfind("k", 0) == 0) {
    x = g.kgen(std::stoi(gen.substr(1)) - 1);
  } else {
    throw std::runtime_error("bad generator '" + gen + "' (expected B<i> or k<i>)");
  }
  IntVec w;
  for (int i : parse_ivec(word)) w.push_back(i - 1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = g.ibraid(*it, x);
  Table t;
  t.payload = {{"word", parse_ivec(word)}, {"gen", gen}, {"image", g.str(x)}};
  t.columns = {"image"};
  t.rows.push_back({g.str(x)});
  emit(t);
  return 0;
}

int cmd_ihall_table(const std::string& shape, const std::string& rho,
                    const std::string& qlist, int cap, bool rank2) {
  std::string spec = resolve_spec(shape, rho);
  Cache cache;
  json key{{"module", "ihall"}, {"op", "table"}, {"shape", spec}, {"q", qlist},
           {"degree", cap}, {"rank2", rank2}};
  json out;
  IHallAlgebra h(parse_quiver(spec), std::max<long>(cap + 2, 6), rank2);
  if (auto hit = cache.get(key)) {
    out = *hit;
  } else {
    json rows = json::array();
    for (int i = 0; i < h.quiver().n; ++i)
      for (int m = 1; m <= cap; ++m) {
        IHallElt x = h.power(h.simple(i), m);
        rows.push_back({{"vertex", i + 1}, {"power", m}, {"value", ihall_json(x)}});
      }
    json primes = json::array();
    for (long p : parse_lvec(qlist)) {
      h.verify_presentation_at(p);
      primes.push_back({{"q", p}, {"presentation", "ok"}});
    }
    out = {{"quiver", quiver_json(h.quiver())}, {"rows", rows}, {"primes", primes}};
    cache.put(key, out);
  }
  Table t;
  t.payload = out;
  t.columns = {"generator", "power", "value"};
  for (auto& r : out.at("rows")) {
    IHallElt x = ihall_of_json(r.at("value"));
    t.rows.push_back({"[S" + std::to_string(r.at("vertex").get<int>()) + "]",
                      std::to_string(r.at("power").get<int>()), h.elt_str(x)});
  }
  emit(t);
  return 0;
}

int cmd_ihall_dual_basis(const std::string& shape, const std::string& rho, int m) {
  std::string spec = resolve_spec(shape, rho);
  IHallAlgebra h(parse_quiver(spec), std::max(m + 2, 6));
  if (h.quiver().n != 1 || !h.quiver().rho_is_identity())
    throw std::runtime_error("dual-basis tables are implemented for the split rank-1 shape");
  int root = h.hall().table(2).root_index({1});
  Table t;
  t.columns = {"k", "m", "element"};
  json rows = json::array();
  for (int mm = 0; mm <= m; ++mm)
    for (int k = 0; 2 * k <= mm; ++k) {
      KSClass cls;
      if (mm - 2 * k > 0) cls[root] = mm - 2 * k;
      IHallElt x = h.dual_L({k}, cls);
      rows.push_back({{"k", k}, {"m", mm}, {"value", ihall_json(x)}});
      t.rows.push_back({std::to_string(k), std::to_string(mm), h.elt_str(x)});
    }
  t.payload = {{"m", m}, {"rows", rows}};
  emit(t);
  return 0;
}

int cmd_nks_ldominant(const std::string& shape, const std::string& rho,
                      const std::string& ws, bool itype) {
  NKS n(parse_quiver(resolve_spec(shape, rho)), itype);
  IntVec w = parse_ivec(ws);
  auto sols = n.enumerate_l_dominant(w);
  Table t;
  t.payload = {{"w", w}, {"itype", itype}, {"v", sols}};
  t.columns = {"v"};
  for (auto& v : sols) t.rows.push_back({ivec_str(v)});
  emit(t);
  return 0;
}

int cmd_nks_dict(const std::string& shape, const std::string& rho,
                 const std::string& lam, bool itype) {
  NKS n(parse_quiver(resolve_spec(shape, rho)), itype);
  // lambda as a dimension vector of a single indecomposable class
  IntVec dim = parse_ivec(lam);
  int r = n.table().root_index(dim);
  if (r < 0) throw std::runtime_error("not a positive root: " + lam);
  auto [v, w] = n.dict(KSClass{{r, 1}});
  Table t;
  t.payload = {{"lambda", dim}, {"itype", itype}, {"v", v}, {"w", w}};
  t.columns = {"v", "w"};
  t.rows.push_back({ivec_str(v), ivec_str(w)});
  emit(t);
  return 0;
}

int cmd_nks_dot(const std::string& shape, const std::string& rho, bool itype) {
  NKS n(parse_quiver(resolve_spec(shape, rho)), itype);
  std::printf("%s", n.dot().c_str());
  return 0;
}

int cmd_rank1(const std::string& what, int a, int b, const std::string& vs,
              const std::string& ws) {
  Table t;
  if (what == "ef") {
    json rows = json::array();
    t.columns = {"v1", "v2", "coeff"};
    for (auto& [v, f] : rank1_EaFb(a, b)) {
      rows.push_back({{"v", {v.first, v.second}}, {"coeff", frac_json(f)}});
      t.rows.push_back({std::to_string(v.first), std::to_string(v.second), f.str()});
    }
    t.payload = {{"a", a}, {"b", b}, {"terms", rows}};
  } else if (what == "L") {
    DoubleAlgebra d(parse_quiver("A1:"));
    IntVec v = parse_ivec(vs), w = parse_ivec(ws);
    DDElt x = rank1_L(d, v.at(0), v.at(1), w.at(0), w.at(1));
    t.payload = {{"v", v}, {"w", w}, {"value", tu_elt_json(d, x)}};
    t.columns = {"value"};
    t.rows.push_back({d.str(x)});
  } else if (what == "iL") {
    json rows = json::array();
    t.columns = {"Bexp", "Kexp", "coeff"};
    for (auto& [k, c] : irank1_L(a, b)) {
      std::ostringstream os;
      os << c;
      rows.push_back({{"B", k.first}, {"K", k.second}, {"coeff", os.str()}});
      t.rows.push_back({std::to_string(k.first), std::to_string(k.second), os.str()});
    }
    t.payload = {{"k", a}, {"m", b}, {"terms", rows}};
  } else if (what == "inverse") {
    json rows = json::array();
    t.columns = {"k", "m", "coeff"};
    for (auto& [k, c] : irank1_inverse(a, b)) {
      std::ostringstream os;
      os << c;
      rows.push_back({{"k", k.first}, {"m", k.second}, {"coeff", os.str()}});
      t.rows.push_back({std::to_string(k.first), std::to_string(k.second), os.str()});
    }
    t.payload = {{"a", a}, {"b", b}, {"terms", rows}};
  } else {
    throw std::runtime_error("unknown rank1 table: " + what);
  }
  emit(t);
  return 0;
}

int cmd_verify(std::vector<std::string> targets, int jobs) {
  if (targets.empty() || (targets.size() == 1 && targets[0] == "all"))
    targets = verify_names();
  std::vector<std::future<VerifyResult>> futs;
  std::vector<VerifyResult> results(targets.size());
  if (jobs > 1) {
    size_t next = 0;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (;;) {
          size_t i;
          {
            std::lock_guard<std::mutex> lk(mu);
            if (next >= targets.size()) return;
            i = next++;
          }
          results[i] = run_verify(targets[i]);
        }
      });
    for (auto& th : pool) th.join();
  } else {
    for (size_t i = 0; i < targets.size(); ++i) results[i] = run_verify(targets[i]);
  }
  int failures = 0;
  for (auto& r : results) {
    if (r.pass) {
      std::printf("PASS %s\n", r.name.c_str());
    } else {
      std::printf("FAIL %s: %s\n", r.name.c_str(), r.detail.c_str());
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hall-algebra and quantum-double workbench"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex"}));

  std::string shape = "A1", rho = "id";
  std::string xs, ys, expr, ds = "1", ws, vs, lam, qlist, gen = "B1", word;
  int window = 4, mval = 6, cap = 3, braid_i = 1, a = 1, b = 1, jobs = 1;
  bool dual = false, inverse = false, itype = false, rank2 = false;
  std::vector<std::string> targets;

  auto add_shape = [&](CLI::App* c) {
    c->add_option("shape", shape, "quiver shape, e.g. A2 or \"A3: 1->2, 2->3\"");
    c->add_option("--rho", rho, "diagram involution, id or e.g. \"(1 3)\"");
  };

  auto* roots = app.add_subcommand("roots", "positive roots of a shape");
  add_shape(roots);

  auto* hall = app.add_subcommand("hall", "generic Hall algebra");
  auto* hall_mult = hall->add_subcommand("mult", "product of two elements");
  add_shape(hall_mult);
  hall_mult->add_option("--x", xs, "left factor, e.g. \"a1\"")->required();
  hall_mult->add_option("--y", ys, "right factor")->required();

  auto* canon = app.add_subcommand("canon", "canonical basis of a degree");
  add_shape(canon);
  canon->add_option("--d", ds, "dimension vector, e.g. 1,1")->required();
  canon->add_flag("--dual", dual, "dual canonical basis");

  auto* tu = app.add_subcommand("tu", "the doubled quantum algebra");
  auto* tu_nf = tu->add_subcommand("nf", "normal form of a generator word");
  add_shape(tu_nf);
  tu_nf->add_option("--expr", expr, "e.g. \"E1 F1\"")->required();
  auto* tu_mult = tu->add_subcommand("mult", "product of two words");
  add_shape(tu_mult);
  tu_mult->add_option("--x", xs)->required();
  tu_mult->add_option("--y", ys)->required();
  auto* tu_braid = tu->add_subcommand("braid", "braid operator image");
  add_shape(tu_braid);
  tu_braid->add_option("--i", braid_i, "vertex (1-based)");
  tu_braid->add_option("--expr", expr)->required();
  tu_braid->add_flag("--inverse", inverse);
  auto* tu_db = tu->add_subcommand("double-basis", "double basis on a window");
  add_shape(tu_db);
  tu_db->add_option("--window", window, "max total degree");

  auto* iqg = app.add_subcommand("iqg", "the embedded coideal algebra");
  auto* iqg_verify = iqg->add_subcommand("verify", "check the presentation");
  add_shape(iqg_verify);
  auto* iqg_braid = iqg->add_subcommand("braid", "relative braid word image");
  add_shape(iqg_braid);
  iqg_braid->add_option("--word", word, "orbit reps, e.g. 1,2")->required();
  iqg_braid->add_option("--gen", gen, "B<i> or k<i>");

  auto* ihall = app.add_subcommand("ihall", "Hall algebra of the bound algebra");
  auto* ihall_table = ihall->add_subcommand("table", "generator power table");
  ihall_table->add_option("--shape", shape)->required();
  ihall_table->add_option("--rho", rho);
  ihall_table->add_option("--qlist", qlist, "primes for per-prime checks, e.g. 3,5");
  ihall_table->add_option("--cap", cap, "max generator power");
  ihall_table->add_flag("--rank2", rank2, "enable rank-2 coverage");
  auto* ihall_db = ihall->add_subcommand("dual-basis", "bar-invariant dual basis");
  add_shape(ihall_db);
  ihall_db->add_option("--m", mval, "max weight");
  ihall_db->add_option("--window", mval, "alias for --m");

  auto* nks = app.add_subcommand("nks", "framed quotient combinatorics");
  auto* nks_ld = nks->add_subcommand("ldominant", "enumerate l-dominant pairs");
  add_shape(nks_ld);
  nks_ld->add_option("--w", ws, "framing vector, e.g. 2,3")->required();
  nks_ld->add_flag("--itype", itype, "involutive quotient");
  auto* nks_dict = nks->add_subcommand("dict", "class to (v, w) dictionary");
  add_shape(nks_dict);
  nks_dict->add_option("--lambda", lam, "root dimension vector")->required();
  nks_dict->add_flag("--itype", itype);
  auto* nks_dot = nks->add_subcommand("dot", "DOT export of the quotient quiver");
  add_shape(nks_dot);
  nks_dot->add_flag("--itype", itype);

  auto* rank1 = app.add_subcommand("rank1", "rank-1 closed forms");
  rank1->add_option("table", expr, "ef | L | iL | inverse")->required();
  rank1->add_option("--a", a);
  rank1->add_option("--b", b);
  rank1->add_option("--v", vs, "for L: v1,v2");
  rank1->add_option("--w", ws, "for L: w1,w2");
  rank1->add_option("--k", a, "alias of --a for iL");
  rank1->add_option("--m", b, "alias of --b for iL");

  auto* verify = app.add_subcommand("verify", "run named verification targets");
  verify->add_option("targets", targets, "target names, or 'all'");
  verify->add_option("--jobs", jobs, "parallel targets");

  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* c) {
    c->fallthrough();
    for (auto* s : c->get_subcommands({})) allow_fallthrough(s);
  };
  for (auto* s : app.get_subcommands({})) allow_fallthrough(s);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) return cmd_roots(shape, rho);
    if (*hall_mult) return cmd_hall_mult(shape, rho, xs, ys);
    if (*canon) return cmd_canon(shape, rho, ds, dual);
    if (*tu_nf) return cmd_tu_nf(shape, rho, expr);
    if (*tu_mult) return cmd_tu_mult(shape, rho, xs, ys);
    if (*tu_braid) return cmd_tu_braid(shape, rho, braid_i, expr, inverse);
    if (*tu_db) return cmd_tu_double_basis(shape, rho, window);
    if (*iqg_verify) return cmd_iqg_verify(shape, rho);
    if (*iqg_braid) return cmd_iqg_braid(shape, rho, word, gen);
    if (*ihall_table) return cmd_ihall_table(shape, rho, qlist, cap, rank2);
    if (*ihall_db) return cmd_ihall_dual_basis(shape, rho, mval);
    if (*nks_ld) return cmd_nks_ldominant(shape, rho, ws, itype);
    if (*nks_dict) return cmd_nks_dict(shape, rho, lam, itype);
    if (*nks_dot) return cmd_nks_dot(shape, rho, itype);
    if (*rank1) return cmd_rank1(expr, a, b, vs, ws);
    if (*verify) return cmd_verify(targets, jobs);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
