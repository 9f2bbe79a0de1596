#include "mvcrystal/am.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mvcrystal/error.hpp"
#include "mvcrystal/io.hpp"

namespace mv {

Int am_constant(const BZDatum& m, int j) {
  const WeylGroup& g = m.group();
  return m.at(g.identity(), j) - m.at(g.times_simple(g.identity(), j), j) - 1;
}

BZDatum am_formula(const BZDatum& m, int j) {
  const WeylGroup& g = m.group();
  const Int c = am_constant(m, j);
  BZDatum out = m;
  for (ChamberId gamma : g.gamma_split(j).complement) {
    const Int pairing = g.chamber(gamma).weight[static_cast<std::size_t>(j)];
    out[gamma] = std::min(m[gamma], m[g.reflect(j, gamma)] + c * pairing);
  }
  return out;
}

Coweight am_reflect(const RootDatum& d, int j, Int c, const Coweight& x) {
  return d.reflect_coweight(static_cast<std::size_t>(j), x) + c * d.simple_coroot(static_cast<std::size_t>(j));
}

AMReport am(const BZDatum& m, int j, Route route) {
  AMReport r;
  r.input = m;
  r.j = j;
  r.c = am_constant(m, j);
  r.output = am_formula(m, j);
  r.f_output = f(m, j, route);
  r.edges = check_edge_inequalities(r.output);
  const PluckerReport pl = check_all_plucker(r.output);
  r.plucker_failures = pl.failures;
  r.unsupported = pl.unsupported;
  r.coherence_failures = check_doubly_laced_coherence(r.output);
  r.equals_f = r.output == r.f_output;
  r.contained_in_f = polytope_contains(r.f_output, r.output);
  return r;
}

BZDatum am_sln(const BZDatum& m, int j) {
  const WeylGroup& g = m.group();
  const RootDatum& d = g.datum();
  if (d.kind() != ClassicalKind::A) throw InvalidArgument("the subset formula needs type A labels");
  const std::size_t n = d.classical_dimension();
  const auto uj = static_cast<std::size_t>(j);
  auto lookup = [&](const std::vector<Int>& x) {
    auto c = g.find_chamber(d.weight_from_classical(x));
    if (!c) throw Conflict("subset is not a chamber weight");
    return *c;
  };
  // {1..j} and {1..j-1, j+1} in 1-based terms.
  std::vector<Int> first(n, 0), swapped(n, 0);
  for (std::size_t k = 0; k <= uj; ++k) first[k] = swapped[k] = 1;
  swapped[uj] = 0;
  swapped[uj + 1] = 1;
  const Int c = m[lookup(first)] - m[lookup(swapped)] - 1;

  BZDatum out = m;
  for (ChamberId gamma = 0; gamma < g.num_chambers(); ++gamma) {
    std::vector<Int> x = d.weight_to_classical(g.chamber(gamma).weight);
    if (x[uj] != 1 || x[uj + 1] != 0) continue;
    std::swap(x[uj], x[uj + 1]);
    out[gamma] = std::min(m[gamma], m[lookup(x)] + c);
  }
  return out;
}

AMConditions am_conditions_check(const BZDatum& m, const BZDatum& m_am, int j) {
  const WeylGroup& g = m.group();
  const RootDatum& d = g.datum();
  const Int c = am_constant(m, j);
  const auto mu = vertices(m);
  const auto mu_am = vertices(m_am);
  const Coweight aj = d.simple_coroot(static_cast<std::size_t>(j));
  AMConditions out;
  std::vector<Coweight> points;
  for (ElementId w = 0; w < g.size(); ++w) {
    points.push_back(mu[w]);
    if (g.descent(w, j, Side::Left)) {
      if (mu_am[w] != mu[w]) out.fixed_vertices = false;
      if (d.pair_root(mu[w], static_cast<std::size_t>(j)) >= c) {
        Coweight rw = am_reflect(d, j, c, mu[w]);
        if (!contains(m_am, rw)) out.keeps_reflected = false;
        points.push_back(rw);
        out.reflected.push_back(std::move(rw));
      }
    } else if (!contains(m_am, mu[w])) {
      out.keeps_vertices = false;
    }
  }
  const Coweight shifted = mu[g.identity()] - aj;
  if (mu_am[g.identity()] != shifted) out.shifted_bottom = false;
  points.push_back(shifted);
  for (ChamberId gamma : g.gamma_split(j).complement) {
    Int best = d.pair(points.front(), g.chamber(gamma).weight);
    for (const auto& p : points) best = std::min(best, d.pair(p, g.chamber(gamma).weight));
    if (best != m_am[gamma]) out.minimal = false;
  }
  std::sort(out.reflected.begin(), out.reflected.end());
  out.reflected.erase(std::unique(out.reflected.begin(), out.reflected.end()), out.reflected.end());
  return out;
}

AMScanSummary am_scan(const GroupPtr& group, int depth, const std::vector<int>& js_in, Corpus corpus,
                      std::size_t max_reported, std::size_t cap) {
  const WeylGroup& g = *group;
  AMScanSummary s;
  s.type = g.datum().name();
  s.depth = depth;
  if (corpus == Corpus::Auto) corpus = g.datum().is_simply_laced() ? Corpus::Lusztig : Corpus::Crystal;
  s.corpus = corpus;
  std::vector<BZDatum> data =
      corpus == Corpus::Lusztig ? lusztig_corpus(group, depth) : binf_enumerate(group, depth, cap).nodes;
  if (data.size() > cap) throw CapExceeded("scan corpus exceeds the node cap of " + std::to_string(cap));
  std::vector<int> js = js_in;
  if (js.empty())
    for (std::size_t j = 0; j < g.rank(); ++j) js.push_back(static_cast<int>(j));
  for (int j : js)
    if (j < 0 || static_cast<std::size_t>(j) >= g.rank()) throw InvalidArgument("node out of range");
  const bool type_a = g.datum().kind() == ClassicalKind::A;

  s.elements = data.size();
  for (std::size_t k = 0; k < data.size(); ++k) {
    for (int j : js) {
      ++s.checks;
      const AMReport r = am(data[k], j);
      if (!r.edge_ok()) ++s.edge_failures;
      if (!r.contained_in_f) ++s.containment_violations;
      if (r.edge_ok() && !am_conditions_check(data[k], r.output, j).all()) ++s.condition_failures;
      if (type_a && !(am_sln(data[k], j) == r.output)) ++s.sln_mismatches;
      if (r.equals_f) continue;
      ++s.failures;
      if (s.first_failures.size() < max_reported) {
        AMScanFailure fail{k, j, data[k], {}, r.contained_in_f};
        for (ChamberId c = 0; c < g.num_chambers(); ++c)
          if (r.output[c] != r.f_output[c]) fail.differing.push_back(c);
        s.first_failures.push_back(std::move(fail));
      }
    }
  }
  return s;
}

Int sln_height(const WeylGroup& g, int j, ChamberId gamma) {
  const RootDatum& d = g.datum();
  if (d.kind() != ClassicalKind::A) throw InvalidArgument("the subset height needs type A labels");
  const std::vector<Int> x = d.weight_to_classical(g.chamber(gamma).weight);
  const Int jj = j + 1;
  Int h = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k]) continue;
    const Int e = static_cast<Int>(k) + 1;
    if (e > jj + 1) ++h;
    if (e < jj) --h;
  }
  return h;
}

JCloseCertificate j_close_check(const GroupPtr& group, int j) {
  const WeylGroup& g = *group;
  const RootDatum& d = g.datum();
  if (j < 0 || static_cast<std::size_t>(j) >= g.rank()) throw InvalidArgument("node out of range");
  const int r = static_cast<int>(g.rank());
  JCloseCertificate cert;
  cert.j = j;

  std::vector<JCloseWitness> all;
  for (ElementId v = 0; v < g.size(); ++v)
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        if (i == k || d.a(i, k) != -1 || d.a(k, i) != -1) continue;
        if (g.descent(v, k, Side::Right) || g.descent(v, i, Side::Right)) continue;
        if (g.simple_times(j, v) != g.times_simple(v, k)) continue;
        const ChamberId gamma = g.chamber_of(g.times_simple(v, i), i);
        const ChamberId delta = g.chamber_of(v, k);
        if (g.is_relative(j, gamma) || g.is_relative(j, delta)) continue;
        all.push_back({gamma, v, i, k, delta});
      }

  const ChamberId seed = g.fundamental_chamber(j);
  cert.rank.assign(g.num_chambers(), -1);
  cert.rank[seed] = 0;
  cert.order.push_back(seed);
  for (int round = 1;; ++round) {
    std::map<ChamberId, JCloseWitness> peeled;
    for (const auto& w : all) {
      if (cert.rank[w.gamma] >= 0 || cert.rank[w.delta] < 0 || cert.rank[w.delta] >= round) continue;
      peeled.emplace(w.gamma, w);
    }
    if (peeled.empty()) break;
    for (const auto& [gamma, w] : peeled) {
      cert.rank[gamma] = round;
      cert.order.push_back(gamma);
      cert.witnesses.push_back(w);
    }
  }
  for (ChamberId c : g.gamma_split(j).complement)
    if (cert.rank[c] < 0) cert.residue.push_back(c);
  cert.success = cert.residue.empty();
  if (d.kind() == ClassicalKind::A) {
    bool ok = true;
    for (const auto& w : all)
      if (sln_height(g, j, w.delta) != sln_height(g, j, w.gamma) - 1) ok = false;
    cert.sln_height_ok = ok;
  }
  return cert;
}

namespace {

GroupPtr c3_group() { return make_group(RootDatum::type_C(3)); }

BZDatum from_names(const GroupPtr& group, const std::vector<NamedValue>& values) {
  const WeylGroup& g = *group;
  std::vector<Int> out(g.num_chambers(), 0);
  std::vector<bool> set(g.num_chambers(), false);
  for (const auto& nv : values) {
    const ChamberId c = parse_chamber_name(g, nv.name);
    if (set[c]) throw Conflict("chamber weight '" + nv.name + "' listed twice");
    set[c] = true;
    out[c] = nv.value;
  }
  for (bool b : set)
    if (!b) throw Conflict("named values do not cover every chamber weight");
  return BZDatum(group, std::move(out));
}

std::vector<std::vector<Int>> classical_vertices(const BZDatum& m) {
  std::vector<std::vector<Int>> out;
  for (const auto& v : vertex_set(m)) out.push_back(m.datum().coweight_to_classical(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Int>> sorted_unique(std::vector<std::vector<Int>> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

BZDatum sp6_polytope(Int x) {
  if (x < 2) throw InvalidArgument("the sp6 polytope needs x >= 2");
  std::vector<NamedValue> v;
  for (const char* n : {"1", "12", "13", "123", "2", "23", "3", "-123", "-12", "-13", "-1"}) v.push_back({n, 0});
  for (const char* n : {"1-3", "12-3", "2-3", "-12-3", "-1-3", "-3"}) v.push_back({n, -x});
  for (const char* n : {"1-2", "1-23", "-23", "-1-23", "-1-2", "-2"}) v.push_back({n, -2});
  for (const char* n : {"1-2-3", "-2-3", "-1-2-3"}) v.push_back({n, -x - 2});
  return from_names(c3_group(), v);
}

Sp6Report sp6_counterexample(Int x, Route route) {
  Sp6Report rep;
  rep.x = x;
  rep.p = sp6_polytope(x);
  const GroupPtr group = rep.p.group_ptr();
  const WeylGroup& g = *group;
  constexpr int j = 0;

  rep.c = am_constant(rep.p, j);
  rep.am_output = am_formula(rep.p, j);
  rep.closed_form = {{"1", -1},     {"13", -1},         {"1-23", -2},    {"-23", -2},    {"-2", -2},
                     {"1-2", -2},   {"1-3", -x - 1},    {"1-2-3", -x - 2}, {"-2-3", -x - 2}};
  {
    BZDatum expected = rep.p;
    std::set<ChamberId> listed;
    for (const auto& nv : rep.closed_form) {
      const ChamberId c = parse_chamber_name(g, nv.name);
      expected[c] = nv.value;
      listed.insert(c);
    }
    const auto& comp = g.gamma_split(j).complement;
    rep.closed_form_ok = expected == rep.am_output && listed == std::set<ChamberId>(comp.begin(), comp.end());
  }
  rep.edge_ok = check_edge_inequalities(rep.am_output).ok();

  // M'_3 + M'_{1-2} = min(M'_{-2} + M'_{13}, M'_1 + M'_{-23}), located by names.
  rep.relation = {"3", "1-2", "-2", "13", "1", "-23"};
  const std::string& n_wi = rep.relation[4];    // w Lambda_i
  const std::string& n_wj = rep.relation[3];    // w Lambda_j
  for (ElementId w = 0; w < g.size() && !rep.relation_found; ++w)
    for (int i = 0; i < static_cast<int>(g.rank()) && !rep.relation_found; ++i)
      for (int k = 0; k < static_cast<int>(g.rank()) && !rep.relation_found; ++k) {
        if (i == k || g.datum().a(i, k) * g.datum().a(k, i) != 1) continue;
        if (g.descent(w, i, Side::Right) || g.descent(w, k, Side::Right)) continue;
        const ElementId wi = g.times_simple(w, i), wk = g.times_simple(w, k);
        auto name = [&](ElementId u, int l) { return chamber_name(g, g.chamber_of(u, l)); };
        if (name(w, i) != n_wi || name(w, k) != n_wj) continue;
        if (name(wi, i) != rep.relation[0] || name(wk, k) != rep.relation[1]) continue;
        if (name(g.times_simple(wk, i), i) != rep.relation[2] || name(g.times_simple(wi, k), k) != rep.relation[5])
          continue;
        const PluckerResult res = check_tropical_plucker(rep.am_output, w, i, k);
        rep.relation_found = true;
        rep.relation_lhs = res.lhs;
        rep.relation_rhs = res.rhs;
      }

  rep.f_output = f(rep.p, j, route);
  const ChamberId c12 = parse_chamber_name(g, "1-2");
  rep.n_1m2 = rep.f_output[c12];
  {
    BZDatum expected = rep.am_output;
    expected[c12] = -3;
    rep.f_differs_only_at_1m2 = expected == rep.f_output;
  }
  rep.contained = polytope_contains(rep.f_output, rep.am_output);

  rep.f_vertices = classical_vertices(rep.f_output);
  rep.f_vertices_published = sorted_unique(
      {{0, 0, 0}, {0, 2, 0}, {-1, 1, 0}, {-1, 2, 1}, {0, 0, x}, {-1, 1, x}, {-1, 2, x - 1}, {0, 2, x}});
  rep.f_vertices_ok = rep.f_vertices == rep.f_vertices_published;
  rep.am_vertices = classical_vertices(rep.am_output);
  rep.am_vertices_published = sorted_unique({{0, 0, 0}, {-1, 1, 0}, {0, 2, 0}, {0, 0, x}, {0, 2, x}, {-1, 1, x}});
  rep.am_vertices_ok = rep.am_vertices == rep.am_vertices_published;
  return rep;
}

}  // namespace mv
