#include "mvcrystal/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mvcrystal/error.hpp"

namespace mv {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string replace_unicode_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (std::size_t pos; (pos = s.find(minus)) != std::string::npos;) s.replace(pos, minus.size(), "-");
  return s;
}

}  // namespace

std::string chamber_name(const WeylGroup& g, ChamberId c) {
  const RootDatum& d = g.datum();
  if (d.kind() == ClassicalKind::None) return "";
  const std::vector<Int> x = d.weight_to_classical(g.chamber(c).weight);
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    if (x[k] < 0) out += '-';
    out += std::to_string(k + 1);
  }
  return out;
}

ChamberId parse_chamber_name(const WeylGroup& g, const std::string& raw) {
  const RootDatum& d = g.datum();
  if (d.kind() == ClassicalKind::None) throw ParseError("unlabelled root datum has no classical names");
  std::string s = replace_unicode_minus(raw);
  const bool braced = !s.empty() && s.front() == '{';
  if (braced) {
    if (s.back() != '}') throw ParseError("unbalanced braces in chamber name '" + raw + "'");
    s = s.substr(1, s.size() - 2);
  }
  const std::size_t n = d.classical_dimension();
  std::vector<Int> x(n, 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos < s.size()) {
    if (braced && any) {
      if (s[pos] != ',') throw ParseError("expected ',' in chamber name '" + raw + "'");
      ++pos;
    }
    Int sign = 1;
    if (pos < s.size() && s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::size_t start = pos;
    // Unbraced names use one digit per index; braced ones allow longer numbers.
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])) && (braced || pos == start)) ++pos;
    if (pos == start) throw ParseError("malformed chamber name '" + raw + "'");
    const std::size_t k = std::stoul(s.substr(start, pos - start));
    if (k < 1 || k > n || x[k - 1] != 0) throw ParseError("bad index in chamber name '" + raw + "'");
    if (sign < 0 && d.kind() == ClassicalKind::A) throw ParseError("type A chamber names are unsigned");
    x[k - 1] = sign;
    any = true;
  }
  if (!any) throw ParseError("empty chamber name");
  auto c = g.find_chamber(d.weight_from_classical(x));
  if (!c) throw ParseError("'" + raw + "' is not a chamber weight");
  return *c;
}

std::string chamber_key(const WeylGroup& g, ChamberId c) {
  const ChamberWeight& cw = g.chamber(c);
  std::string out = "L" + std::to_string(cw.level + 1) + ":";
  for (std::size_t i = 0; i < cw.weight.rank(); ++i) out += (i ? "," : "") + std::to_string(cw.weight[i]);
  return out;
}

ChamberId parse_chamber_key(const WeylGroup& g, const std::string& key) {
  const auto colon = key.find(':');
  if (key.size() < 4 || key[0] != 'L' || colon == std::string::npos)
    throw ParseError("malformed key '" + key + "' (expected L<level>:<c_1,...,c_r>)");
  std::vector<Int> level, coords;
  try {
    level = parse_int_list(key.substr(1, colon - 1));
    coords = parse_int_list(key.substr(colon + 1));
  } catch (const ParseError&) {
    throw ParseError("malformed key '" + key + "'");
  }
  if (level.size() != 1 || coords.size() != g.rank()) throw ParseError("malformed key '" + key + "'");
  auto c = g.find_chamber(Weight(coords));
  if (!c) throw ParseError("key '" + key + "' is not a chamber weight");
  if (static_cast<Int>(g.chamber(*c).level) + 1 != level[0])
    throw ParseError("key '" + key + "' has the wrong level");
  return *c;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(replace_unicode_minus(text));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'");
    }
    if (pos != item.size()) throw ParseError("not an integer: '" + item + "'");
    out.push_back(static_cast<Int>(v));
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::string emit_bz(const BZDatum& m) {
  const WeylGroup& g = m.group();
  ordered_json doc;
  doc["cartan"] = g.datum().cartan().rows();
  doc["labels"] = to_string(g.datum().kind());
  ordered_json entries = ordered_json::array();
  for (ChamberId c = 0; c < g.num_chambers(); ++c) {
    ordered_json e;
    e["key"] = chamber_key(g, c);
    e["value"] = m[c];
    if (g.datum().kind() != ClassicalKind::None) e["pretty"] = chamber_name(g, c);
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

BZDatum parse_bz(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("cartan") || !doc.contains("entries"))
    throw ParseError("BZ file needs 'cartan' and 'entries'");

  std::vector<std::vector<Int>> rows;
  const json& cartan = doc["cartan"];
  if (!cartan.is_array() || cartan.empty()) throw ParseError("'cartan' must be a non-empty array");
  for (const auto& row : cartan) {
    if (!row.is_array()) throw ParseError("'cartan' rows must be arrays");
    std::vector<Int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError("Cartan entries must be integers");
      r.push_back(v.get<Int>());
    }
    rows.push_back(std::move(r));
  }
  ClassicalKind kind = ClassicalKind::None;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_string()) throw ParseError("'labels' must be a string");
    const std::string labels = doc["labels"].get<std::string>();
    if (labels == "A") kind = ClassicalKind::A;
    else if (labels == "C") kind = ClassicalKind::C;
    else if (labels != "none") throw ParseError("'labels' must be A, C or none");
  }
  CartanMatrix cm = [&] {
    try {
      return CartanMatrix(rows);
    } catch (const InvalidArgument& ex) {
      throw ParseError(ex.what());
    }
  }();
  GroupPtr group = make_group(RootDatum(cm, kind));
  const WeylGroup& g = *group;

  const json& entries = doc["entries"];
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  std::vector<Int> values(g.num_chambers(), 0);
  std::set<ChamberId> seen;
  for (const auto& e : entries) {
    if (!e.is_object() || !e.contains("key") || !e.contains("value") || !e["key"].is_string())
      throw ParseError("each entry needs a string 'key' and a 'value'");
    if (!e["value"].is_number_integer()) throw ParseError("entry values must be integers");
    const ChamberId c = parse_chamber_key(g, e["key"].get<std::string>());
    if (!seen.insert(c).second) throw ParseError("duplicate key '" + e["key"].get<std::string>() + "'");
    if (e.contains("pretty")) {
      if (!e["pretty"].is_string()) throw ParseError("'pretty' must be a string");
      if (parse_chamber_name(g, e["pretty"].get<std::string>()) != c)
        throw ParseError("pretty name '" + e["pretty"].get<std::string>() + "' does not match key '" +
                         e["key"].get<std::string>() + "'");
    }
    values[c] = e["value"].get<Int>();
  }
  if (seen.size() != g.num_chambers())
    throw ParseError("entries cover " + std::to_string(seen.size()) + " of " +
                     std::to_string(g.num_chambers()) + " chamber weights");
  return BZDatum(group, std::move(values));
}

BZDatum read_bz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bz(ss.str());
}

namespace {

struct NodeLabel {
  std::vector<Int> lusztig;
  Coweight weight;
  Int depth = 0;
};

std::vector<NodeLabel> labels(const CrystalGraph& graph, const ReducedWord& word) {
  std::vector<NodeLabel> out;
  out.reserve(graph.nodes.size());
  for (const auto& m : graph.nodes) out.push_back({lusztig_datum(m, word).n, bottom_vertex(m), depth(m)});
  return out;
}

ReducedWord resolve_word(const CrystalGraph& graph, const ReducedWord& word) {
  if (word.empty()) return graph.group->lex_least_word();
  graph.group->path(word);
  return word;
}

std::vector<Int> one_based(const ReducedWord& w) {
  std::vector<Int> out;
  for (int i : w) out.push_back(i + 1);
  return out;
}

}  // namespace

std::string graph_to_json(const CrystalGraph& graph, const ReducedWord& word_in) {
  const ReducedWord word = resolve_word(graph, word_in);
  const auto lab = labels(graph, word);
  ordered_json doc;
  doc["type"] = graph.group->datum().name();
  doc["word"] = one_based(word);
  doc["root"] = graph.root;
  ordered_json nodes = ordered_json::array();
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    ordered_json n;
    n["id"] = k;
    n["lusztig"] = lab[k].lusztig;
    n["weight"] = lab[k].weight.coords();
    n["depth"] = lab[k].depth;
    n["bz"] = graph.nodes[k].values();
    nodes.push_back(std::move(n));
  }
  doc["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& e : graph.edges) {
    ordered_json x;
    x["from"] = e.from;
    x["to"] = e.to;
    x["j"] = e.j + 1;
    edges.push_back(std::move(x));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string graph_to_dot(const CrystalGraph& graph, const ReducedWord& word_in) {
  const ReducedWord word = resolve_word(graph, word_in);
  const auto lab = labels(graph, word);
  std::ostringstream os;
  os << "digraph crystal {\n";
  os << "  // type " << graph.group->datum().name() << ", Lusztig data for word "
     << to_string(one_based(word)) << ", root n" << graph.root << "\n";
  os << "  node [shape=box];\n";
  for (std::size_t k = 0; k < graph.nodes.size(); ++k)
    os << "  n" << k << " [label=\"" << to_string(lab[k].lusztig) << "\\nwt " << to_string(lab[k].weight.coords())
       << "\"];\n";
  for (const auto& e : graph.edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.j + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace mv
