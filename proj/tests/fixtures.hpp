// Named fixtures shared by the unit and acceptance tests.

#ifndef MVCRYSTAL_TESTS_FIXTURES_HPP
#define MVCRYSTAL_TESTS_FIXTURES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mvcrystal/am.hpp"
#include "mvcrystal/io.hpp"

namespace fix {

using namespace mv;

inline GroupPtr group(const std::string& name) { return make_group(name); }

inline ChamberId ch(const WeylGroup& g, const std::string& name) { return parse_chamber_name(g, name); }

inline Int val(const BZDatum& m, const std::string& name) { return m[ch(m.group(), name)]; }

/// A datum given by a default value and overrides at named chamber weights.
inline BZDatum named(const GroupPtr& g, Int fill, const std::map<std::string, Int>& values) {
  BZDatum m = BZDatum::constant(g, fill);
  for (const auto& [name, v] : values) m[ch(*g, name)] = v;
  return m;
}

/// Every M_gamma = -1 in A2.
inline BZDatum a2() { return BZDatum::constant(group("A2"), -1); }
/// f_1 of the A2 hexagon as published: M_1 = M_13 = -2, others -1.
inline BZDatum a2_prime() { return named(group("A2"), -1, {{"1", -2}, {"13", -2}}); }
/// Every M_gamma = 0.
inline BZDatum top(const std::string& type = "A2") { return BZDatum::constant(group(type), 0); }

/// AM_1 of the sp6 polytope with parameter x: the polytope on Gamma^1 and
/// the published closed forms on Gamma_1.
inline BZDatum c3_prime(Int x) {
  BZDatum m = sp6_polytope(x);
  const std::map<std::string, Int> on_gamma1 = {
      {"1", -1},          {"13", -1},         {"1-23", -2},       {"-23", -2},     {"-2", -2},
      {"1-2", -2},        {"1-3", -x - 1},    {"1-2-3", -x - 2},  {"-2-3", -x - 2}};
  for (const auto& [name, v] : on_gamma1) m[ch(m.group(), name)] = v;
  return m;
}

/// Classical coordinates of a coweight.
inline std::vector<Int> classical(const RootDatum& d, const Coweight& mu) { return d.coweight_to_classical(mu); }

/// Coweight from classical coordinates.
inline Coweight cw(const RootDatum& d, const std::vector<Int>& x) { return d.coweight_from_classical(x); }

/// Sorted, deduplicated classical vertices.
inline std::set<std::vector<Int>> classical_vertices(const BZDatum& m) {
  std::set<std::vector<Int>> out;
  for (const auto& v : vertex_set(m)) out.insert(classical(m.datum(), v));
  return out;
}

/// Translate by multiples of 2 rho^vee until the datum lies in B(mu_{w_0}).
inline BZDatum embed(const BZDatum& m) {
  BZDatum out = m;
  while (!in_B_lambda(out, top_vertex(out))) out = translate(out, m.datum().two_rho_vee());
  return out;
}

inline std::string data_path(const std::string& file) { return std::string(MVCRYSTAL_TEST_DATA) + "/" + file; }

}  // namespace fix

#endif  // MVCRYSTAL_TESTS_FIXTURES_HPP
