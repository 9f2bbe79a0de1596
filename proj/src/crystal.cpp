#include "mvcrystal/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

#include "mvcrystal/error.hpp"

namespace mv {

namespace {

// Bound on the number of 2 rho^vee shifts tried when embedding into B(lambda).
constexpr int kMaxShift = 100000;

Route resolve(const BZDatum& m, Route route) {
  const bool simply_laced = m.datum().is_simply_laced();
  if (route == Route::Auto) return simply_laced ? Route::Lusztig : Route::String;
  if (route == Route::Lusztig && !simply_laced)
    throw UnsupportedType("the Lusztig route needs a simply-laced type");
  return route;
}

void check_node(const BZDatum& m, int j) {
  if (j < 0 || static_cast<std::size_t>(j) >= m.group().rank())
    throw InvalidArgument("node " + std::to_string(j + 1) + " out of range");
}

// Shifted copy of m lying in B(lam) with lam = t 2rho^vee, together with
// the undo translation, for the least t such that `accept` holds.
template <class Accept>
std::pair<BZDatum, Coweight> embed(const BZDatum& m, const ReducedWord& word, Accept accept) {
  const Coweight top = top_vertex(m);
  const BZDatum m0 = translate(m, -top);
  const Coweight step = m.datum().two_rho_vee();
  Coweight lam = m.datum().zero_coweight();
  for (int t = 0; t <= kMaxShift; ++t, lam += step) {
    BZDatum mt = translate(m0, lam);
    if (!in_B_lambda(mt, lam)) continue;
    const std::vector<Int> p = midpoint_heights(mt, word);
    if (std::any_of(p.begin(), p.end(), [](Int x) { return x < 0; })) continue;
    if (!accept(p)) continue;
    return {std::move(mt), top - lam};
  }
  throw CapExceeded("no embedding into B(lambda) found within the shift bound");
}

BZDatum f_lusztig(const BZDatum& m, int j) {
  const WeylGroup& g = m.group();
  LusztigDatum n = lusztig_datum(m, g.word_starting_with(j));
  n.n[0] += 1;
  return bz_from_lusztig(m.group_ptr(), n,
                         bottom_vertex(m) - m.datum().simple_coroot(static_cast<std::size_t>(j)));
}

BZDatum f_string(const BZDatum& m, int j) {
  const ReducedWord word = m.group().word_starting_with(j);
  auto [mt, undo] = embed(m, word, [](const std::vector<Int>& p) { return p[0] >= 1; });
  StringDatum p{word, midpoint_heights(mt, word)};
  p.p[0] -= 1;
  const Coweight base = bottom_vertex(mt) - m.datum().simple_coroot(static_cast<std::size_t>(j));
  return translate(string_to_bz(m.group_ptr(), p, base), undo);
}

BZDatum e_lusztig(const BZDatum& m, int j) {
  const WeylGroup& g = m.group();
  LusztigDatum n = lusztig_datum(m, g.word_starting_with(j));
  if (n.n[0] <= 0) throw Conflict("e_j on a polytope with vanishing first edge");
  n.n[0] -= 1;
  return bz_from_lusztig(m.group_ptr(), n,
                         bottom_vertex(m) + m.datum().simple_coroot(static_cast<std::size_t>(j)));
}

BZDatum e_string(const BZDatum& m, int j) {
  const ReducedWord word = m.group().word_starting_with(j);
  auto [mt, undo] = embed(m, word, [](const std::vector<Int>&) { return true; });
  StringDatum p{word, midpoint_heights(mt, word)};
  p.p[0] += 1;
  const Coweight base = bottom_vertex(mt) + m.datum().simple_coroot(static_cast<std::size_t>(j));
  return translate(string_to_bz(m.group_ptr(), p, base), undo);
}

}  // namespace

BZDatum f(const BZDatum& m, int j, Route route) {
  check_node(m, j);
  return resolve(m, route) == Route::Lusztig ? f_lusztig(m, j) : f_string(m, j);
}

std::optional<BZDatum> e(const BZDatum& m, int j, Route route) {
  check_node(m, j);
  const WeylGroup& g = m.group();
  const Route r = resolve(m, route);
  if (vertex(m, g.identity()) == vertex(m, g.times_simple(g.identity(), j))) return std::nullopt;
  return r == Route::Lusztig ? e_lusztig(m, j) : e_string(m, j);
}

BZDatum f_star(const BZDatum& m, int j, Route route) { return negate(f(negate(m), j, route)); }

std::optional<BZDatum> e_star(const BZDatum& m, int j, Route route) {
  auto r = e(negate(m), j, route);
  if (!r) return std::nullopt;
  return negate(*r);
}

CrystalElement make_element(const BZDatum& m) {
  BZDatum n = stable_normalize(m);
  Coweight wt = bottom_vertex(n);
  return {std::move(n), std::move(wt)};
}

CrystalElement f(const CrystalElement& b, int j, Route route) { return make_element(f(b.bz, j, route)); }

std::optional<CrystalElement> e(const CrystalElement& b, int j, Route route) {
  auto r = e(b.bz, j, route);
  if (!r) return std::nullopt;
  return make_element(*r);
}

CrystalElement f_star(const CrystalElement& b, int j, Route route) {
  return make_element(f_star(b.bz, j, route));
}

std::optional<CrystalElement> e_star(const CrystalElement& b, int j, Route route) {
  auto r = e_star(b.bz, j, route);
  if (!r) return std::nullopt;
  return make_element(*r);
}

std::optional<std::size_t> CrystalGraph::find(const BZDatum& m) const {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k] == m) return k;
  return std::nullopt;
}

std::size_t default_node_cap() {
  if (const char* env = std::getenv("MVCRYSTAL_NODE_CAP")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError("MVCRYSTAL_NODE_CAP must be a positive integer");
  }
  return 100000;
}

void canonical_sort(std::vector<BZDatum>& data) {
  std::vector<std::pair<Int, BZDatum>> keyed;
  keyed.reserve(data.size());
  for (auto& m : data) keyed.emplace_back(depth(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.values() < b.second.values();
  });
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = std::move(keyed[k].second);
}

namespace {

// BFS along f_j with a filter on new nodes; `expand` decides whether a node's
// successors are explored.
template <class Keep, class Expand>
CrystalGraph grow(const GroupPtr& group, BZDatum root, std::size_t cap, Route route, Keep keep,
                  Expand expand) {
  std::vector<BZDatum> nodes{root};
  std::map<std::vector<Int>, std::size_t> index{{root.values(), 0}};
  std::vector<CrystalEdge> edges;
  const int r = static_cast<int>(group->rank());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (!expand(nodes[head])) continue;
    for (int j = 0; j < r; ++j) {
      BZDatum next = f(nodes[head], j, route);
      if (!keep(next)) continue;
      auto it = index.find(next.values());
      if (it == index.end()) {
        if (nodes.size() >= cap)
          throw CapExceeded("crystal graph exceeds the node cap of " + std::to_string(cap));
        it = index.emplace(next.values(), nodes.size()).first;
        nodes.push_back(std::move(next));
      }
      edges.push_back({head, j, it->second});
    }
  }

  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Int> depths(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) depths[k] = depth(nodes[k]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (depths[a] != depths[b]) return depths[a] < depths[b];
    return nodes[a].values() < nodes[b].values();
  });
  std::vector<std::size_t> rank_of(nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank_of[order[k]] = k;

  CrystalGraph g;
  g.group = group;
  g.nodes.reserve(nodes.size());
  for (std::size_t k : order) g.nodes.push_back(nodes[k]);
  for (auto& e : edges) e = {rank_of[e.from], e.j, rank_of[e.to]};
  std::sort(edges.begin(), edges.end());
  g.edges = std::move(edges);
  g.root = rank_of[0];
  return g;
}

}  // namespace

CrystalGraph crystal_graph_lambda(const GroupPtr& group, const Coweight& lam, std::size_t cap, Route route) {
  if (!group->datum().is_dominant(lam))
    throw InvalidArgument("highest weight " + to_string(lam.coords()) + " is not dominant");
  return grow(
      group, point_polytope(group, lam), cap, route, [&](const BZDatum& m) { return in_B_lambda(m, lam); },
      [](const BZDatum&) { return true; });
}

CrystalGraph binf_enumerate(const GroupPtr& group, int max_depth, std::size_t cap, Route route) {
  if (max_depth < 0) throw InvalidArgument("depth must be non-negative");
  return grow(
      group, BZDatum::constant(group, 0), cap, route, [](const BZDatum&) { return true; },
      [&](const BZDatum& m) { return depth(m) < max_depth; });
}

std::vector<BZDatum> lusztig_corpus(const GroupPtr& group, int max_sum) {
  const WeylGroup& g = *group;
  if (!g.datum().is_simply_laced()) throw UnsupportedType("Lusztig corpora need a simply-laced type");
  if (max_sum < 0) throw InvalidArgument("entry sum bound must be non-negative");
  const ReducedWord word = g.lex_least_word();
  const std::size_t m = word.size();
  std::vector<BZDatum> out;
  LusztigDatum n{word, std::vector<Int>(m, 0)};
  // Odometer over n in N^m with sum(n) <= max_sum.
  Int sum = 0;
  while (true) {
    out.push_back(bz_from_lusztig(group, n, -lusztig_weight(g, n)));
    std::size_t k = 0;
    while (k < m) {
      if (sum < max_sum) {
        ++n.n[k];
        ++sum;
        break;
      }
      sum -= n.n[k];
      n.n[k] = 0;
      ++k;
    }
    if (k == m) break;
  }
  canonical_sort(out);
  return out;
}

}  // namespace mv
