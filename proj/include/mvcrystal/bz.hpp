#ifndef MVCRYSTAL_BZ_HPP
#define MVCRYSTAL_BZ_HPP

#include <string>
#include <vector>

#include "mvcrystal/weyl.hpp"

namespace mv {

/// Integer map Gamma -> Z indexed by ChamberId of its group.
class BZDatum {
 public:
  BZDatum() = default;
  BZDatum(GroupPtr group, std::vector<Int> values);
  /// Every M_gamma equal to `value`.
  static BZDatum constant(GroupPtr group, Int value);

  const WeylGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }
  std::size_t size() const { return values_.size(); }

  Int operator[](ChamberId c) const { return values_[c]; }
  Int& operator[](ChamberId c) { return values_[c]; }
  /// M at the chamber weight `gamma`; throws InvalidArgument if gamma is not in Gamma.
  Int at(const Weight& gamma) const;
  /// M_{w . Lambda_i}.
  Int at(ElementId w, int i) const { return values_[group_->chamber_of(w, i)]; }
  const std::vector<Int>& values() const { return values_; }

  friend bool operator==(const BZDatum& a, const BZDatum& b) { return a.values_ == b.values_; }
  friend bool operator<(const BZDatum& a, const BZDatum& b) { return a.values_ < b.values_; }

 private:
  GroupPtr group_;
  std::vector<Int> values_;
};

struct LusztigDatum {
  ReducedWord word;
  std::vector<Int> n;
};

// --- vertices ---------------------------------------------------------------

/// mu_w = w . (sum_i M_{w Lambda_i} alpha_i^vee).
Coweight vertex(const BZDatum& m, ElementId w);
/// GGMS datum, indexed by ElementId.
std::vector<Coweight> vertices(const BZDatum& m);
Coweight bottom_vertex(const BZDatum& m);  // mu_e
Coweight top_vertex(const BZDatum& m);     // mu_{w_0}
/// Distinct vertices, sorted.
std::vector<Coweight> vertex_set(const BZDatum& m);

// --- edge inequalities ------------------------------------------------------

/// n(w, i) = -M_{w Lambda_i} - M_{w s_i Lambda_i} - sum_{j != i} a_ji M_{w Lambda_j}.
Int edge_length(const BZDatum& m, ElementId w, int i);

struct EdgeViolation {
  ElementId w = 0;
  int i = 0;
  Int length = 0;
};

struct EdgeReport {
  std::size_t checked = 0;
  std::vector<EdgeViolation> violations;
  bool ok() const { return violations.empty(); }
};

EdgeReport check_edge_inequalities(const BZDatum& m);

// --- tropical Pluecker relations --------------------------------------------

enum class PluckerStatus { Holds, Fails, Unsupported };

struct PluckerResult {
  PluckerStatus status = PluckerStatus::Holds;
  Int lhs = 0;
  Int rhs = 0;
};

/// Requires i != j, w s_i > w and w s_j > w (InvalidArgument otherwise).
PluckerResult check_tropical_plucker(const BZDatum& m, ElementId w, int i, int j);

struct PluckerFailure {
  ElementId w = 0;
  int i = 0;
  int j = 0;
  Int lhs = 0;
  Int rhs = 0;
};

struct PluckerReport {
  std::size_t checked = 0;      // positions with a_ij a_ji = 1
  std::size_t vacuous = 0;      // positions with a_ij = 0
  std::size_t unsupported = 0;  // positions with a_ij a_ji = 2
  std::vector<PluckerFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Every position (w, i < j) with w s_i > w and w s_j > w.
PluckerReport check_all_plucker(const BZDatum& m);

// --- Lusztig data -----------------------------------------------------------

LusztigDatum lusztig_datum(const BZDatum& m, const ReducedWord& word);

/// Simply-laced only (UnsupportedType otherwise). Throws InvalidArgument on
/// negative entries and Conflict if two derivations of some M_gamma disagree.
BZDatum bz_from_lusztig(const GroupPtr& group, const LusztigDatum& n, const Coweight& mu_e);

/// sum_k n_k w_{k-1} alpha_{i_k}^vee = mu_{w_0} - mu_e.
Coweight lusztig_weight(const WeylGroup& g, const LusztigDatum& n);

// --- transformations --------------------------------------------------------

/// M'_gamma = M_{-gamma}.
BZDatum negate(const BZDatum& m);
/// M'_gamma = M_gamma + <nu, gamma>.
BZDatum translate(const BZDatum& m, const Coweight& nu);
/// Translate so that mu_{w_0} = 0.
BZDatum stable_normalize(const BZDatum& m);
bool is_stable_normal(const BZDatum& m);

// --- membership -------------------------------------------------------------

bool contains(const BZDatum& m, const Coweight& x);
/// P(inner) is a subset of P(outer): inner_gamma >= outer_gamma everywhere.
bool polytope_contains(const BZDatum& outer, const BZDatum& inner);

/// M_gamma = <lam, gamma>.
BZDatum point_polytope(const GroupPtr& group, const Coweight& lam);
/// conv(W . lam): M_{w Lambda_i} = <w_0 lam, Lambda_i>.
BZDatum lowest_polytope(const GroupPtr& group, const Coweight& lam);

/// M_{w_0 s_i Lambda_i} >= <w_0 lam, Lambda_i> for all i. Requires
/// mu_{w_0}(M) = lam (InvalidArgument otherwise); false if lam is not dominant.
bool in_B_lambda(const BZDatum& m, const Coweight& lam);
/// P subset of conv(W . lam), with the same top-vertex requirement.
bool in_B_lambda_hull(const BZDatum& m, const Coweight& lam);

/// Coroot-coordinate sum.
Int height(const Coweight& mu);
/// height(mu_{w_0} - mu_e).
Int depth(const BZDatum& m);

}  // namespace mv

#endif  // MVCRYSTAL_BZ_HPP
