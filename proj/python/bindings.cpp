#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "mvcrystal/am.hpp"
#include "mvcrystal/error.hpp"
#include "mvcrystal/io.hpp"

namespace py = pybind11;
using namespace mv;

namespace {

Route route_from(const std::string& s) {
  if (s == "auto") return Route::Auto;
  if (s == "lusztig") return Route::Lusztig;
  if (s == "string") return Route::String;
  throw InvalidArgument("route must be auto, lusztig or string");
}

ReducedWord word_from(const std::vector<int>& one_based) {
  ReducedWord w;
  for (int v : one_based) w.push_back(v - 1);
  return w;
}

std::vector<int> word_to(const ReducedWord& w) {
  std::vector<int> out;
  for (int v : w) out.push_back(v + 1);
  return out;
}

std::vector<std::vector<Int>> coords(const std::vector<Coweight>& vs) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

py::dict validity_dict(const BZDatum& m) {
  const ValidityReport v = validate(m);
  py::dict d;
  d["ok"] = v.ok();
  d["edges_checked"] = v.edges.checked;
  d["edge_violations"] = v.edges.violations.size();
  d["plucker_checked"] = v.plucker.checked;
  d["plucker_unsupported"] = v.plucker.unsupported;
  py::list fails;
  for (const auto& f : v.plucker.failures) fails.append(py::make_tuple(f.lhs, f.rhs));
  d["plucker_failures"] = fails;
  d["coherence_failures"] = v.coherence.size();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact computations with MV polytopes through their BZ data";

  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(mod, "InvalidArgument", PyExc_ValueError);
  py::register_exception<UnsupportedType>(mod, "UnsupportedType", PyExc_NotImplementedError);
  py::register_exception<CapExceeded>(mod, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<Conflict>(mod, "Conflict", PyExc_RuntimeError);

  py::class_<BZDatum>(mod, "BZDatum")
      .def_static(
          "constant", [](const std::string& type, Int v) { return BZDatum::constant(make_group(type), v); },
          py::arg("type"), py::arg("value"))
      .def_static("from_json", &parse_bz, py::arg("text"))
      .def_static(
          "from_names",
          [](const std::string& type, const std::map<std::string, Int>& values, Int fill) {
            GroupPtr g = make_group(type);
            BZDatum m = BZDatum::constant(g, fill);
            for (const auto& [name, v] : values) m[parse_chamber_name(*g, name)] = v;
            return m;
          },
          py::arg("type"), py::arg("values"), py::arg("fill") = 0)
      .def_static(
          "point", [](const std::string& type, const std::vector<Int>& lam) {
            return point_polytope(make_group(type), Coweight(lam));
          },
          py::arg("type"), py::arg("lam"))
      .def("to_json", &emit_bz)
      .def_property_readonly("type", [](const BZDatum& m) { return m.datum().name(); })
      .def_property_readonly("values", &BZDatum::values)
      .def("names", [](const BZDatum& m) {
        std::vector<std::string> out;
        for (ChamberId c = 0; c < m.size(); ++c) out.push_back(chamber_name(m.group(), c));
        return out;
      })
      .def("__getitem__", [](const BZDatum& m, const std::string& name) {
        return m[parse_chamber_name(m.group(), name)];
      })
      .def("validate", &validity_dict)
      .def("is_valid", [](const BZDatum& m) { return validate(m).ok(); })
      .def("bottom_vertex", [](const BZDatum& m) { return bottom_vertex(m).coords(); })
      .def("top_vertex", [](const BZDatum& m) { return top_vertex(m).coords(); })
      .def("vertices", [](const BZDatum& m) { return coords(vertex_set(m)); })
      .def("classical_vertices",
           [](const BZDatum& m) {
             std::vector<std::vector<Int>> out;
             for (const auto& v : vertex_set(m)) out.push_back(m.datum().coweight_to_classical(v));
             return out;
           })
      .def("depth", [](const BZDatum& m) { return depth(m); })
      .def("stable_normalize", &stable_normalize)
      .def("negate", &negate)
      .def(
          "lusztig", [](const BZDatum& m, const std::vector<int>& w) { return lusztig_datum(m, word_from(w)).n; },
          py::arg("word"))
      .def(
          "kashiwara", [](const BZDatum& m, const std::vector<int>& w) { return kashiwara_datum(m, word_from(w)).p; },
          py::arg("word"))
      .def(
          "f", [](const BZDatum& m, int j, const std::string& r) { return f(m, j - 1, route_from(r)); },
          py::arg("j"), py::arg("route") = "auto")
      .def(
          "e", [](const BZDatum& m, int j, const std::string& r) { return e(m, j - 1, route_from(r)); },
          py::arg("j"), py::arg("route") = "auto")
      .def(
          "f_star", [](const BZDatum& m, int j, const std::string& r) { return f_star(m, j - 1, route_from(r)); },
          py::arg("j"), py::arg("route") = "auto")
      .def(
          "e_star", [](const BZDatum& m, int j, const std::string& r) { return e_star(m, j - 1, route_from(r)); },
          py::arg("j"), py::arg("route") = "auto")
      .def(
          "am",
          [](const BZDatum& m, int j, const std::string& r) {
            const AMReport rep = am(m, j - 1, route_from(r));
            py::dict d;
            d["c"] = rep.c;
            d["output"] = rep.output;
            d["f_output"] = rep.f_output;
            d["edge_ok"] = rep.edge_ok();
            py::list fails;
            for (const auto& x : rep.plucker_failures) fails.append(py::make_tuple(x.lhs, x.rhs));
            d["plucker_failures"] = fails;
            d["equals_f"] = rep.equals_f;
            d["contained_in_f"] = rep.contained_in_f;
            return d;
          },
          py::arg("j"), py::arg("route") = "auto")
      .def(py::self == py::self)
      .def("__repr__", [](const BZDatum& m) { return "<BZDatum " + m.datum().name() + " " + to_string(m.values()) + ">"; });

  mod.def(
      "from_lusztig",
      [](const std::string& type, const std::vector<int>& word, const std::vector<Int>& n,
         const std::vector<Int>& mu_e) {
        return bz_from_lusztig(make_group(type), LusztigDatum{word_from(word), n}, Coweight(mu_e));
      },
      py::arg("type"), py::arg("word"), py::arg("n"), py::arg("mu_e"));
  mod.def(
      "from_string_datum",
      [](const std::string& type, const std::vector<int>& word, const std::vector<Int>& p,
         const std::vector<Int>& mu_e) {
        return string_to_bz(make_group(type), StringDatum{word_from(word), p}, Coweight(mu_e));
      },
      py::arg("type"), py::arg("word"), py::arg("p"), py::arg("mu_e"));
  mod.def(
      "weyl_order", [](const std::string& type) { return make_group(type)->size(); }, py::arg("type"));
  mod.def(
      "lex_least_word", [](const std::string& type) { return word_to(make_group(type)->lex_least_word()); },
      py::arg("type"));
  mod.def(
      "graph_json",
      [](const std::string& type, std::optional<std::vector<Int>> lam, std::optional<int> depth) {
        GroupPtr g = make_group(type);
        if (lam) return graph_to_json(crystal_graph_lambda(g, Coweight(*lam)));
        if (depth) return graph_to_json(binf_enumerate(g, *depth));
        throw InvalidArgument("graph_json needs lam or depth");
      },
      py::arg("type"), py::arg("lam") = py::none(), py::arg("depth") = py::none());
  mod.def(
      "crystal_size", [](const std::string& type, const std::vector<Int>& lam) {
        return crystal_graph_lambda(make_group(type), Coweight(lam)).nodes.size();
      },
      py::arg("type"), py::arg("lam"));
  mod.def(
      "amscan",
      [](const std::string& type, int depth, const std::vector<int>& js) {
        const AMScanSummary s = am_scan(make_group(type), depth, word_from(js));
        py::dict d;
        d["elements"] = s.elements;
        d["checks"] = s.checks;
        d["failures"] = s.failures;
        d["edge_failures"] = s.edge_failures;
        d["containment_violations"] = s.containment_violations;
        return d;
      },
      py::arg("type"), py::arg("depth"), py::arg("js") = std::vector<int>{});
  mod.def(
      "sp6_counterexample",
      [](Int x) {
        const Sp6Report r = sp6_counterexample(x);
        py::dict d;
        d["ok"] = r.ok();
        d["c"] = r.c;
        d["relation_lhs"] = r.relation_lhs;
        d["relation_rhs"] = r.relation_rhs;
        d["n_1m2"] = r.n_1m2;
        d["f_vertices"] = r.f_vertices;
        d["am_output"] = r.am_output;
        d["f_output"] = r.f_output;
        return d;
      },
      py::arg("x"));
}
