#include <doctest.h>

#include <cstdlib>

#include "fixtures.hpp"
#include "mvcrystal/error.hpp"
#include "oracles.hpp"

using namespace mv;

TEST_CASE("f_1 on the A2 hexagon") {
  const BZDatum out = f(fix::a2(), 0);
  CHECK(out == fix::a2_prime());
  CHECK(f(fix::a2(), 0, Route::String) == fix::a2_prime());
  const RootDatum& d = out.datum();
  const auto vs = vertices(out);
  const auto& g = out.group();
  CHECK(fix::classical(d, vs[g.identity()]) == std::vector<Int>{-2, 1, 1});
  CHECK(fix::classical(d, vs[g.product({1})]) == std::vector<Int>{-2, 2, 0});
  CHECK(fix::classical(d, vs[g.product({1, 0})]) == std::vector<Int>{-1, 2, -1});
}

TEST_CASE("f on the top element") {
  for (const char* name : {"A2", "A3"}) {
    const auto g = make_group(name);
    for (int j = 0; j < static_cast<int>(g->rank()); ++j) {
      const ReducedWord w = g->word_starting_with(j);
      std::vector<Int> expected(w.size(), 0);
      expected[0] = 1;
      CHECK(lusztig_datum(f(fix::top(name), j), w).n == expected);
    }
  }
}

TEST_CASE("f_1 on the sp6 polytope") {
  const BZDatum n = f(sp6_polytope(2), 0, Route::String);
  const BZDatum mp = fix::c3_prime(2);
  for (ChamberId c = 0; c < n.size(); ++c) {
    if (chamber_name(n.group(), c) == "1-2")
      CHECK(n[c] == -3);
    else
      CHECK(n[c] == mp[c]);
  }
  const std::set<std::vector<Int>> expected = {{0, 0, 0},  {0, 2, 0},  {-1, 1, 0}, {-1, 2, 1},
                                               {0, 0, 2},  {-1, 1, 2}, {-1, 2, 1}, {0, 2, 2}};
  CHECK(fix::classical_vertices(n) == expected);
}

TEST_CASE("e_j") {
  CHECK(e(fix::a2_prime(), 0) == fix::a2());
  CHECK(e(fix::a2_prime(), 0, Route::String) == fix::a2());
  for (int j = 0; j < 2; ++j) CHECK_FALSE(e(fix::top(), j).has_value());
  const auto r = e(fix::a2(), 0);
  REQUIRE(r.has_value());
  CHECK(lusztig_datum(*r, {0, 1, 0}).n == std::vector<Int>{0, 1, 1});
}

TEST_CASE("starred operators") {
  const BZDatum b = fix::top("A1");
  CHECK(stable_normalize(f_star(b, 0)) == stable_normalize(f(b, 0)));

  const BZDatum m = fix::a2();
  const BZDatum s = f_star(m, 0);
  const auto& g = m.group();
  const auto before = vertices(m), after = vertices(s);
  for (ElementId w = 0; w < g.size(); ++w)
    if (!g.descent(w, 0, Side::Left)) CHECK(after[w] == before[w]);
  CHECK(after[g.longest()] == before[g.longest()] + m.datum().simple_coroot(0));
  CHECK(s == negate(f(negate(m), 0)));
  CHECK(e_star(s, 0) == m);
  CHECK_FALSE(e_star(fix::top(), 1).has_value());
}

TEST_CASE("crystal elements") {
  const CrystalElement b = make_element(fix::a2());
  CHECK(is_stable_normal(b.bz));
  CHECK(b.weight == bottom_vertex(b.bz));
  const CrystalElement c = f(b, 1);
  CHECK(c.weight == b.weight - b.bz.datum().simple_coroot(1));
  CHECK(is_stable_normal(c.bz));
  const auto back = e(c, 1);
  REQUIRE(back.has_value());
  CHECK(back->bz == b.bz);
  CHECK(f_star(b, 0).weight == b.weight - b.bz.datum().simple_coroot(0));
}

TEST_CASE("B(lambda) sizes match the Weyl dimension formula") {
  const struct {
    const char* type;
    std::vector<Int> lam;
  } cases[] = {{"A1", {1}},       {"A1", {3}},       {"A2", {1, 1}},    {"A2", {2, 1}},    {"A2", {2, 2}},
               {"A3", {1, 1, 1}}, {"A3", {1, 2, 1}}, {"C2", {1, 1}},    {"C2", {1, 2}},    {"C2", {2, 2}},
               {"C3", {1, 1, 1}}, {"C3", {1, 2, 2}}, {"C3", {1, 2, 3}}};
  for (const auto& c : cases) {
    const auto g = make_group(c.type);
    if (!g->datum().is_dominant(Coweight(c.lam))) continue;
    const CrystalGraph graph = crystal_graph_lambda(g, Coweight(c.lam));
    CHECK_MESSAGE(static_cast<Int>(graph.nodes.size()) == oracle::dual_dimension(g->datum().cartan().rows(), c.lam),
                  c.type);
  }
  // A1 chains have n + 1 nodes with <lam, alpha_1> = n.
  CHECK(crystal_graph_lambda(make_group("A1"), Coweight{2}).nodes.size() == 5);
}

TEST_CASE("B(lambda) has a unique source and sink") {
  const auto g = make_group("A2");
  const Coweight lam{2, 1};
  const CrystalGraph graph = crystal_graph_lambda(g, lam);
  std::vector<int> in(graph.nodes.size(), 0), out(graph.nodes.size(), 0);
  for (const auto& edge : graph.edges) {
    ++out[edge.from];
    ++in[edge.to];
  }
  std::size_t sources = 0, sinks = 0;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    if (in[k] == 0) {
      ++sources;
      CHECK(graph.nodes[k] == point_polytope(g, lam));
      CHECK(graph.root == k);
    }
    if (out[k] == 0) {
      ++sinks;
      CHECK(graph.nodes[k] == lowest_polytope(g, lam));
    }
  }
  CHECK(sources == 1);
  CHECK(sinks == 1);
  CHECK_THROWS_AS(crystal_graph_lambda(g, Coweight{-1, 1}), InvalidArgument);
}

TEST_CASE("B(infinity) truncations match the Kostant count") {
  CHECK(binf_enumerate(make_group("A2"), 0).nodes.size() == 1);
  CHECK(binf_enumerate(make_group("A2"), 2).nodes.size() == 7);
  for (const char* name : {"A1", "A2", "A3", "C2", "C3"})
    for (int d = 0; d <= 4; ++d) {
      const auto g = make_group(name);
      CHECK(static_cast<Int>(binf_enumerate(g, d).nodes.size()) ==
            oracle::kostant_count(g->datum().cartan().rows(), d));
    }
}

TEST_CASE("the sp6 polytope sits in the C3 depth-6 truncation") {
  const CrystalGraph graph = binf_enumerate(make_group("C3"), 6);
  CHECK(graph.find(stable_normalize(sp6_polytope(2))).has_value());
}

TEST_CASE("graph edges are exactly f_j") {
  const CrystalGraph graph = binf_enumerate(make_group("C2"), 3);
  for (const auto& edge : graph.edges) {
    CHECK(f(graph.nodes[edge.from], edge.j) == graph.nodes[edge.to]);
    CHECK(e(graph.nodes[edge.to], edge.j) == graph.nodes[edge.from]);
  }
  CHECK(std::is_sorted(graph.edges.begin(), graph.edges.end()));
}

TEST_CASE("node cap") {
  CHECK_THROWS_AS(binf_enumerate(make_group("A3"), 6, 10), CapExceeded);
  setenv("MVCRYSTAL_NODE_CAP", "17", 1);
  CHECK(default_node_cap() == 17);
  unsetenv("MVCRYSTAL_NODE_CAP");
  CHECK(default_node_cap() == 100000);
}

TEST_CASE("lusztig corpus sizes") {
  CHECK(lusztig_corpus(make_group("A2"), 6).size() == 84);
  CHECK(lusztig_corpus(make_group("A3"), 4).size() == 210);
  CHECK_THROWS_AS(lusztig_corpus(make_group("C2"), 1), UnsupportedType);
}
