#ifndef MVCRYSTAL_AM_HPP
#define MVCRYSTAL_AM_HPP

#include <optional>
#include <string>
#include <vector>

#include "mvcrystal/crystal.hpp"

namespace mv {

/// c = M_{Lambda_j} - M_{s_j Lambda_j} - 1.
Int am_constant(const BZDatum& m, int j);
/// M' = M on Gamma^j and min(M_gamma, M_{s_j gamma} + c <alpha_j^vee, gamma>) on Gamma_j.
BZDatum am_formula(const BZDatum& m, int j);
/// r(x) = s_j x + c alpha_j^vee.
Coweight am_reflect(const RootDatum& d, int j, Int c, const Coweight& x);

struct AMReport {
  BZDatum input;
  int j = 0;
  Int c = 0;
  BZDatum output;
  BZDatum f_output;
  EdgeReport edges;
  std::vector<PluckerFailure> plucker_failures;
  std::vector<CoherenceFailure> coherence_failures;
  std::size_t unsupported = 0;
  bool equals_f = false;
  bool contained_in_f = false;

  bool edge_ok() const { return edges.ok(); }
};

AMReport am(const BZDatum& m, int j, Route route = Route::Auto);

/// Subset form of M' in type A (InvalidArgument for other types).
BZDatum am_sln(const BZDatum& m, int j);

struct AMConditions {
  bool fixed_vertices = true;    // mu'_w = mu_w for s_j w < w
  bool shifted_bottom = true;    // mu'_e = mu_e - alpha_j^vee
  bool keeps_vertices = true;    // mu_w in P' for s_j w > w
  bool keeps_reflected = true;   // r(mu_w) in P' when s_j w < w, <mu_w, alpha_j> >= c
  bool minimal = true;           // hull of the mandated points gives M' on Gamma_j
  std::vector<Coweight> reflected;

  bool all() const { return fixed_vertices && shifted_bottom && keeps_vertices && keeps_reflected && minimal; }
};

AMConditions am_conditions_check(const BZDatum& m, const BZDatum& m_am, int j);

/// Lusztig: stable-normal data whose lex-least-word Lusztig datum has entry
/// sum <= depth (simply-laced). Crystal: B(infinity) elements of weight depth
/// <= depth. Auto: Lusztig when simply laced.
enum class Corpus { Auto, Lusztig, Crystal };

struct AMScanFailure {
  std::size_t element = 0;
  int j = 0;
  BZDatum input;
  std::vector<ChamberId> differing;
  bool contained = false;
};

struct AMScanSummary {
  std::string type;
  int depth = 0;
  Corpus corpus = Corpus::Auto;
  std::size_t elements = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t edge_failures = 0;
  std::size_t containment_violations = 0;
  std::size_t condition_failures = 0;   // am_conditions_check failed although edge_ok
  std::size_t sln_mismatches = 0;       // type A only
  std::vector<AMScanFailure> first_failures;
};

/// Compares AM_j with f_j on every corpus element for j in `js` (empty: all).
AMScanSummary am_scan(const GroupPtr& group, int depth, const std::vector<int>& js = {},
                      Corpus corpus = Corpus::Auto, std::size_t max_reported = 5,
                      std::size_t cap = default_node_cap());

struct JCloseWitness {
  ChamberId gamma = 0;
  ElementId v = 0;
  int i = 0;
  int k = 0;
  ChamberId delta = 0;
};

struct JCloseCertificate {
  int j = 0;
  bool success = false;
  /// Peeling order; rank[c] is the round in which c was peeled (Lambda_j: 0).
  std::vector<ChamberId> order;
  std::vector<int> rank;
  std::vector<JCloseWitness> witnesses;  // one per peeled gamma != Lambda_j
  std::vector<ChamberId> residue;
  /// Type A: whether H(delta) = H(gamma) - 1 on every witness triple.
  std::optional<bool> sln_height_ok;
};

JCloseCertificate j_close_check(const GroupPtr& group, int j);

/// H(gamma) = #{k in gamma : k > j+1} - #{k in gamma : k < j}, 1-based j.
Int sln_height(const WeylGroup& g, int j, ChamberId gamma);

/// The sp6 polytope with vertices (0,0,0), (0,2,0), (0,0,x), (0,2,x).
BZDatum sp6_polytope(Int x);

struct NamedValue {
  std::string name;
  Int value = 0;
};

struct Sp6Report {
  Int x = 0;
  BZDatum p;
  BZDatum am_output;
  BZDatum f_output;
  Int c = 0;
  std::vector<NamedValue> closed_form;   // expected M' on Gamma_1
  bool closed_form_ok = false;
  bool edge_ok = false;
  std::vector<std::string> relation;     // six names: lhs1, lhs2, a, b, c, d
  Int relation_lhs = 0;
  Int relation_rhs = 0;
  bool relation_found = false;
  Int n_1m2 = 0;
  bool f_differs_only_at_1m2 = false;
  bool contained = false;
  std::vector<std::vector<Int>> f_vertices;          // classical, sorted
  std::vector<std::vector<Int>> f_vertices_published;
  bool f_vertices_ok = false;
  std::vector<std::vector<Int>> am_vertices;
  std::vector<std::vector<Int>> am_vertices_published;
  bool am_vertices_ok = false;

  bool ok() const {
    return closed_form_ok && edge_ok && relation_found && relation_lhs == -2 && relation_rhs == -3 &&
           n_1m2 == -3 && f_differs_only_at_1m2 && contained && f_vertices_ok && am_vertices_ok;
  }
};

/// Requires x >= 2.
Sp6Report sp6_counterexample(Int x, Route route = Route::String);

}  // namespace mv

#endif  // MVCRYSTAL_AM_HPP
