// Command-line front end: verify, op, graph, amscan, jclose, counterexample.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvcrystal/am.hpp"
#include "mvcrystal/error.hpp"
#include "mvcrystal/io.hpp"

namespace {

using namespace mv;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kNull = 1, kInvalid = 2, kUnsupported = 3, kInternal = 4, kParse = 64 };

std::string word_string(const ReducedWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return "(" + s + ")";
}

std::string element_string(const WeylGroup& g, ElementId w) {
  return w == g.identity() ? std::string("e") : "s" + word_string(g.reduced_word(w));
}

std::string name_or_key(const WeylGroup& g, ChamberId c) {
  const std::string n = chamber_name(g, c);
  return n.empty() ? chamber_key(g, c) : n;
}

Route parse_route(const std::string& s) {
  if (s == "auto") return Route::Auto;
  if (s == "lusztig") return Route::Lusztig;
  if (s == "string") return Route::String;
  throw ParseError("route must be auto, lusztig or string");
}

ReducedWord parse_word(const WeylGroup& g, const std::string& s) {
  ReducedWord w;
  for (Int v : parse_int_list(s)) {
    if (v < 1 || v > static_cast<Int>(g.rank())) throw ParseError("word letter out of range");
    w.push_back(static_cast<int>(v - 1));
  }
  return w;
}

int node_index(const WeylGroup& g, int j) {
  if (j < 1 || static_cast<std::size_t>(j) > g.rank())
    throw ParseError("--j must lie in 1.." + std::to_string(g.rank()));
  return j - 1;
}

ValidityReport print_validity(const BZDatum& m, std::ostream& os) {
  const WeylGroup& g = m.group();
  const ValidityReport v = validate(m);
  os << "type " << g.datum().name() << ", " << g.num_chambers() << " chamber weights\n";
  os << "edge inequalities: " << v.edges.checked << " checked, " << v.edges.violations.size() << " violations\n";
  for (const auto& e : v.edges.violations)
    os << "  edge violation at w=" << element_string(g, e.w) << " i=" << e.i + 1 << ": length " << e.length << "\n";
  os << "tropical Plucker relations: " << v.plucker.checked << " checked, " << v.plucker.vacuous << " vacuous, "
     << v.plucker.unsupported << " unsupported (doubly laced), " << v.plucker.failures.size() << " failures\n";
  for (const auto& f : v.plucker.failures) {
    const ElementId wi = g.times_simple(f.w, f.i), wj = g.times_simple(f.w, f.j);
    os << "  relation failed at w=" << element_string(g, f.w) << " i=" << f.i + 1 << " j=" << f.j + 1 << ": M_"
       << name_or_key(g, g.chamber_of(wi, f.i)) << " + M_" << name_or_key(g, g.chamber_of(wj, f.j)) << " = min(M_"
       << name_or_key(g, g.chamber_of(f.w, f.i)) << " + M_" << name_or_key(g, g.chamber_of(g.times_simple(wi, f.j), f.j))
       << ", M_" << name_or_key(g, g.chamber_of(g.times_simple(wj, f.i), f.i)) << " + M_"
       << name_or_key(g, g.chamber_of(f.w, f.j)) << "): lhs " << f.lhs << " rhs " << f.rhs << "\n";
  }
  if (v.plucker.unsupported > 0) {
    os << "doubly-laced transition coherence: " << v.coherence.size() << " failures\n";
    for (const auto& c : v.coherence)
      os << "  coherence failed at w=" << element_string(g, c.w) << " i=" << c.i + 1 << " j=" << c.j + 1
         << ": expected " << to_string(c.expected) << " got " << to_string(c.actual) << "\n";
  }
  os << "status: " << (v.ok() ? "valid" : "invalid") << "\n";
  return v;
}

int cmd_verify(const std::string& path) {
  const BZDatum m = read_bz_file(path);
  return print_validity(m, std::cout).ok() ? kOk : kInvalid;
}

BZDatum require_valid(const std::string& path) {
  BZDatum m = read_bz_file(path);
  std::ostringstream report;
  if (!print_validity(m, report).ok()) {
    std::cerr << report.str();
    throw InvalidArgument("input is not a valid BZ datum");
  }
  return m;
}

int cmd_op(const std::string& op, const std::string& path, int j_in, const std::string& route_name) {
  const Route route = parse_route(route_name);
  const BZDatum m = require_valid(path);
  const int j = node_index(m.group(), j_in);
  if (op == "fj") {
    std::cout << emit_bz(f(m, j, route));
  } else if (op == "fjstar") {
    std::cout << emit_bz(f_star(m, j, route));
  } else if (op == "ej" || op == "ejstar") {
    auto r = op == "ej" ? e(m, j, route) : e_star(m, j, route);
    if (!r) {
      std::cerr << op << " --j " << j_in << ": null (no raising possible)\n";
      return kNull;
    }
    std::cout << emit_bz(*r);
  } else if (op == "am") {
    const AMReport r = am(m, j, route);
    std::cout << emit_bz(r.output);
    std::cerr << "AM_" << j_in << ": c=" << r.c << " edge_ok=" << (r.edge_ok() ? "true" : "false")
              << " plucker_failures=" << r.plucker_failures.size() << " coherence_failures="
              << r.coherence_failures.size() << " equals_f=" << (r.equals_f ? "true" : "false")
              << " contained_in_f=" << (r.contained_in_f ? "true" : "false") << "\n";
    for (const auto& f : r.plucker_failures)
      std::cerr << "  relation failed at w=" << element_string(m.group(), f.w) << " i=" << f.i + 1
                << " j=" << f.j + 1 << ": lhs " << f.lhs << " rhs " << f.rhs << "\n";
  } else {
    throw ParseError("unknown op '" + op + "'");
  }
  return kOk;
}

int cmd_graph(const std::string& type, const std::string& lambda, int depth, const std::string& format,
              const std::string& word_text, const std::string& route_name) {
  const GroupPtr g = make_group(type);
  const Route route = parse_route(route_name);
  if (format != "dot" && format != "json") throw ParseError("--format must be dot or json");
  CrystalGraph graph;
  if (!lambda.empty()) {
    const std::vector<Int> coords = parse_int_list(lambda);
    if (coords.size() != g->rank()) throw ParseError("--lambda needs " + std::to_string(g->rank()) + " entries");
    graph = crystal_graph_lambda(g, Coweight(coords), default_node_cap(), route);
  } else if (depth >= 0) {
    graph = binf_enumerate(g, depth, default_node_cap(), route);
  } else {
    throw ParseError("graph needs --lambda or --depth");
  }
  const ReducedWord word = word_text.empty() ? ReducedWord{} : parse_word(*g, word_text);
  std::cout << (format == "dot" ? graph_to_dot(graph, word) : graph_to_json(graph, word));
  return kOk;
}

int cmd_amscan(const std::string& type, int depth, const std::vector<int>& js_in, const std::string& corpus_name,
               bool as_json) {
  const GroupPtr g = make_group(type);
  Corpus corpus = Corpus::Auto;
  if (corpus_name == "lusztig") corpus = Corpus::Lusztig;
  else if (corpus_name == "crystal") corpus = Corpus::Crystal;
  else if (corpus_name != "auto") throw ParseError("--corpus must be auto, lusztig or crystal");
  std::vector<int> js;
  for (int j : js_in) js.push_back(node_index(*g, j));
  const AMScanSummary s = am_scan(g, depth, js, corpus);
  const std::string corpus_label = s.corpus == Corpus::Lusztig ? "lusztig" : "crystal";
  if (as_json) {
    ordered_json doc;
    doc["type"] = s.type;
    doc["depth"] = s.depth;
    doc["corpus"] = corpus_label;
    doc["elements"] = s.elements;
    doc["checks"] = s.checks;
    doc["failures"] = s.failures;
    doc["edge_failures"] = s.edge_failures;
    doc["containment_violations"] = s.containment_violations;
    doc["condition_failures"] = s.condition_failures;
    if (g->datum().kind() == ClassicalKind::A) doc["sln_mismatches"] = s.sln_mismatches;
    ordered_json fails = ordered_json::array();
    for (const auto& f : s.first_failures) {
      ordered_json x;
      x["element"] = f.element;
      x["j"] = f.j + 1;
      x["contained"] = f.contained;
      ordered_json diff = ordered_json::array();
      for (ChamberId c : f.differing) diff.push_back(name_or_key(*g, c));
      x["differing"] = diff;
      x["bz"] = f.input.values();
      fails.push_back(std::move(x));
    }
    doc["first_failures"] = std::move(fails);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << s.type << " depth " << s.depth << " (" << corpus_label << " corpus): " << s.elements
              << " elements, " << s.checks << " checks, " << s.failures << " failures\n";
    std::cout << "edge failures " << s.edge_failures << ", containment violations " << s.containment_violations
              << ", condition failures " << s.condition_failures;
    if (g->datum().kind() == ClassicalKind::A) std::cout << ", subset-formula mismatches " << s.sln_mismatches;
    std::cout << "\n";
    for (const auto& f : s.first_failures) {
      std::cout << "  failure: element " << f.element << " j=" << f.j + 1 << " differs at";
      for (ChamberId c : f.differing) std::cout << " " << name_or_key(*g, c);
      std::cout << (f.contained ? " (contained in f_j)" : " (not contained in f_j)") << "\n";
    }
  }
  return kOk;
}

int cmd_jclose(const std::string& type, int j_in) {
  const GroupPtr g = make_group(type);
  const JCloseCertificate c = j_close_check(g, node_index(*g, j_in));
  std::cout << g->datum().name() << " j=" << j_in << ": " << (c.success ? "j-close" : "peeling stuck") << ", "
            << c.order.size() << " peeled, " << c.residue.size() << " left\n";
  for (const auto& w : c.witnesses)
    std::cout << "  " << name_or_key(*g, w.gamma) << " <- " << name_or_key(*g, w.delta) << " via v="
              << element_string(*g, w.v) << " i=" << w.i + 1 << " k=" << w.k + 1 << "\n";
  for (ChamberId r : c.residue) std::cout << "  unpeeled " << name_or_key(*g, r) << "\n";
  if (c.sln_height_ok) std::cout << "subset height drops by one on every witness: " << (*c.sln_height_ok ? "yes" : "no") << "\n";
  return kOk;
}

std::string vec(const std::vector<Int>& v) { return to_string(v); }

int cmd_counterexample(Int x, const std::string& route_name) {
  if (x < 2) throw InvalidArgument("--x must be at least 2");
  const Sp6Report r = sp6_counterexample(x, parse_route(route_name));
  const WeylGroup& g = r.p.group();
  std::cout << "sp6 counterexample, x = " << x << ", j = 1\n";
  std::cout << "P = conv{(0,0,0), (0,2,0), (0,0," << x << "), (0,2," << x << ")}, MV polytope: "
            << (validate(r.p).ok() ? "yes" : "no") << "\n";
  std::cout << "c = " << r.c << "\n";
  std::cout << "AM_1 output on Gamma_1 (closed form / computed):\n";
  for (const auto& nv : r.closed_form)
    std::cout << "  M'_" << nv.name << " = " << nv.value << " / " << r.am_output[parse_chamber_name(g, nv.name)]
              << "\n";
  std::cout << "closed forms match: " << (r.closed_form_ok ? "yes" : "no") << "\n";
  std::cout << "edge inequalities of M': " << (r.edge_ok ? "hold" : "fail") << "\n";
  std::cout << "vertices of AM_1 P:";
  for (const auto& v : r.am_vertices) std::cout << " " << vec(v);
  std::cout << (r.am_vertices_ok ? " (match)" : " (MISMATCH)") << "\n";
  std::cout << "relation M'_" << r.relation[0] << " + M'_" << r.relation[1] << " = min(M'_" << r.relation[2]
            << " + M'_" << r.relation[3] << ", M'_" << r.relation[4] << " + M'_" << r.relation[5] << "): ";
  if (r.relation_found)
    std::cout << "LHS " << r.relation_lhs << ", RHS " << r.relation_rhs << "\n";
  else
    std::cout << "position not found\n";
  std::cout << "f_1 P: N_1-2 = " << r.n_1m2 << ", differs from M' only at 1-2: "
            << (r.f_differs_only_at_1m2 ? "yes" : "no") << ", AM_1 P inside f_1 P: " << (r.contained ? "yes" : "no")
            << "\n";
  std::cout << "vertices of f_1 P:";
  for (const auto& v : r.f_vertices) std::cout << " " << vec(v);
  std::cout << "\npublished vertices:";
  for (const auto& v : r.f_vertices_published) std::cout << " " << vec(v);
  std::cout << (r.f_vertices_ok ? " (match)" : " (MISMATCH)") << "\n";
  std::cout << "reproduced: " << (r.ok() ? "yes" : "no") << "\n";
  return r.ok() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with MV polytopes through their BZ data"};
  app.require_subcommand(1);

  std::string file, op, route = "auto", type, lambda, format = "json", word, corpus = "auto";
  int j = 0, depth = -1;
  bool as_json = false;
  std::vector<int> js;
  Int x = 2;

  auto* verify = app.add_subcommand("verify", "Check edge inequalities and tropical Plucker relations");
  verify->add_option("file", file, "BZ datum JSON file")->required();

  auto* opcmd = app.add_subcommand("op", "Apply fj, ej, fjstar, ejstar or am and print the result");
  opcmd->add_option("op", op, "fj | ej | fjstar | ejstar | am")
      ->required()
      ->check(CLI::IsMember({"fj", "ej", "fjstar", "ejstar", "am"}));
  opcmd->add_option("file", file, "BZ datum JSON file")->required();
  opcmd->add_option("--j", j, "Node (1-based)")->required();
  opcmd->add_option("--route", route, "auto | lusztig | string");

  auto* graph = app.add_subcommand("graph", "Emit a B(lambda) or truncated B(infinity) crystal graph");
  graph->add_option("--type", type, "A1..A6, C2..C4")->required();
  auto* lam_opt = graph->add_option("--lambda", lambda, "Highest weight in coroot coordinates, e.g. 1,1");
  auto* depth_opt = graph->add_option("--depth", depth, "B(infinity) depth bound");
  lam_opt->excludes(depth_opt);
  graph->add_option("--format", format, "dot | json");
  graph->add_option("--word", word, "Reduced word for node labels, e.g. 2,1,2");
  graph->add_option("--route", route, "auto | lusztig | string");

  auto* amscan = app.add_subcommand("amscan", "Compare AM_j with f_j over a B(infinity) corpus");
  amscan->add_option("--type", type, "A1..A6, C2..C4")->required();
  amscan->add_option("--depth", depth, "Corpus depth")->required();
  amscan->add_option("--j", js, "Nodes to scan (default all)")->delimiter(',');
  amscan->add_option("--corpus", corpus, "auto | lusztig | crystal");
  amscan->add_flag("--json", as_json, "JSON summary");

  auto* jclose = app.add_subcommand("jclose", "Search for a j-close peeling of Gamma_j");
  jclose->add_option("--type", type, "A1..A6, C2..C4")->required();
  jclose->add_option("--j", j, "Node (1-based)")->required();

  auto* counter = app.add_subcommand("counterexample", "Recompute the sp6 counterexample");
  counter->add_option("--x", x, "Parameter x >= 2");
  counter->add_option("--route", route, "auto | lusztig | string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*verify) return cmd_verify(file);
    if (*opcmd) return cmd_op(op, file, j, route);
    if (*graph) return cmd_graph(type, lambda, depth, format, word, route);
    if (*amscan) return cmd_amscan(type, depth, js, corpus, as_json);
    if (*jclose) return cmd_jclose(type, j);
    if (*counter) return cmd_counterexample(x, route);
  } catch (const mv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const mv::InvalidArgument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  } catch (const mv::UnsupportedType& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const mv::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kInternal;
  } catch (const mv::Conflict& e) {
    std::cerr << "internal conflict: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
