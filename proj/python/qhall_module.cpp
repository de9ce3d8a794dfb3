// Python bindings: thin, string-oriented views of the exact computations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhall/canon.hpp"
#include "qhall/ihall.hpp"
#include "qhall/iqg.hpp"
#include "qhall/nks.hpp"
#include "qhall/verify.hpp"

namespace py = pybind11;
using namespace qhall;

namespace {

// Laurent in u as {exponent: "num/den"}
py::dict laurent_dict(const Laurent& x) {
  py::dict d;
  for (auto& [e, c] : x.coeffs()) {
    std::ostringstream os;
    os << c;
    d[py::int_(e)] = os.str();
  }
  return d;
}

std::string shape_spec(const std::string& shape) {
  if (shape.find(':') != std::string::npos) return shape;
  Quiver q = standard_quiver(shape[0], std::stoi(shape.substr(1)));
  std::ostringstream os;
  os << shape << ": ";
  for (size_t i = 0; i < q.arrows.size(); ++i)
    os << (i ? ", " : "") << q.arrows[i].first + 1 << "->" << q.arrows[i].second + 1;
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_qhall, m) {
  m.doc() = "exact Hall-algebra and quantum-double computations";

  m.def("positive_roots", [](const std::string& spec) {
    return positive_roots(parse_quiver(shape_spec(spec)));
  });

  m.def("cartan_matrix", [](const std::string& spec) {
    return cartan_matrix(parse_quiver(shape_spec(spec)));
  });

  m.def("hall_simple_product",
        [](const std::string& spec, int i, int j) {
          HallAlgebra h(parse_quiver(shape_spec(spec)));
          HallElt p = h.product(h.simple(i - 1), h.simple(j - 1));
          py::list out;
          for (auto& [cls, cf] : p.c) {
            py::dict term;
            term["cls"] = h.table(2).class_str(cls);
            term["coeff"] = laurent_dict(cf);
            out.append(term);
          }
          return out;
        },
        py::arg("spec"), py::arg("i"), py::arg("j"));

  m.def("canonical_basis",
        [](const std::string& spec, const IntVec& d, bool dual) {
          HallAlgebra h(parse_quiver(shape_spec(spec)));
          BasisFamily f = dual ? dual_canonical_basis(h, d) : canonical_basis(h, d);
          py::list classes, trans;
          for (auto& c : f.classes) classes.append(h.table(2).class_str(c));
          for (auto& row : f.trans) {
            py::list r;
            for (auto& x : row) r.append(laurent_dict(x));
            trans.append(r);
          }
          py::dict out;
          out["classes"] = classes;
          out["transition"] = trans;
          return out;
        },
        py::arg("spec"), py::arg("d"), py::arg("dual") = false);

  m.def("double_basis",
        [](const std::string& spec, const IntVec& gplus, const IntVec& gminus) {
          DoubleAlgebra dd(parse_quiver(shape_spec(spec)));
          auto fam = dd.bg_double_basis(gplus, gminus);
          py::list out;
          for (auto& x : fam.elts) {
            DDElt e = x;
            out.append(dd.str(e));
          }
          return out;
        },
        py::arg("spec"), py::arg("gplus"), py::arg("gminus"));

  m.def("iqg_verify_presentation", [](const std::string& spec) {
    IQG g(parse_quiver(shape_spec(spec)));
    g.verify_presentation();
    return true;
  });

  m.def("ihall_dual_L",
        [](int k, int mminus2k) {
          static IHallAlgebra h(parse_quiver("A1:"), 10);
          int root = h.hall().table(2).root_index({1});
          KSClass cls;
          if (mminus2k > 0) cls[root] = mminus2k;
          return h.elt_str(h.dual_L({k}, cls));
        },
        py::arg("k"), py::arg("stack"),
        "L(k, 2k + stack) of the split rank-1 algebra, printed exactly");

  m.def("nks_ldominant",
        [](const std::string& spec, const IntVec& w, bool itype) {
          NKS n(parse_quiver(shape_spec(spec)), itype);
          return n.enumerate_l_dominant(w);
        },
        py::arg("spec"), py::arg("w"), py::arg("itype") = false);

  m.def("nks_dot", [](const std::string& spec, bool itype) {
    return NKS(parse_quiver(shape_spec(spec)), itype).dot();
  }, py::arg("spec"), py::arg("itype") = false);

  m.def("rank1_iL", [](int k, int mm) {
    py::dict out;
    for (auto& [key, c] : irank1_L(k, mm)) {
      std::ostringstream os;
      os << c;
      out[py::make_tuple(key.first, key.second)] = os.str();
    }
    return out;
  });

  m.def("verify_names", [] { return verify_names(); });
  m.def("verify", [](const std::string& name) {
    VerifyResult r = run_verify(name);
    return py::make_tuple(r.pass, r.detail);
  });
}
