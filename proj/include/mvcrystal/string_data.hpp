#ifndef MVCRYSTAL_STRING_DATA_HPP
#define MVCRYSTAL_STRING_DATA_HPP

#include <vector>

#include "mvcrystal/bz.hpp"

namespace mv {

struct StringDatum {
  ReducedWord word;
  std::vector<Int> p;

  friend bool operator==(const StringDatum&, const StringDatum&) = default;
};

/// p_k = M_{w_{k-1} Lambda_{i_k}} - M_{w_k Lambda_{i_k}}, with no precondition.
std::vector<Int> midpoint_heights(const BZDatum& m, const ReducedWord& word);

/// Kashiwara datum of M along `word`. Throws InvalidArgument unless M lies
/// in B(mu_{w_0}) and every entry is non-negative.
StringDatum kashiwara_datum(const BZDatum& m, const ReducedWord& word);

/// Applies the piecewise-linear change of word for a braid move of order
/// 2, 3 or 4. The result word has the block flipped. Order 6 throws
/// UnsupportedType.
StringDatum braid_transition(const WeylGroup& g, const StringDatum& p, const BraidMove& move);

namespace detail {
/// As braid_transition, with the two order-4 formula families exchanged.
/// Only for tests that pin the orientation.
StringDatum braid_transition_swapped(const WeylGroup& g, const StringDatum& p, const BraidMove& move);
BZDatum string_to_bz_swapped(const GroupPtr& group, const StringDatum& p, const Coweight& mu_e);
}  // namespace detail

/// Rebuilds the BZ datum with Kashiwara datum `p` and bottom vertex `mu_e`
/// by walking words of the braid graph until Gamma is covered. Throws Conflict
/// when overlapping derivations disagree and InvalidArgument on negative input.
BZDatum string_to_bz(const GroupPtr& group, const StringDatum& p, const Coweight& mu_e);

struct CoherenceFailure {
  ElementId w = 0;
  int i = 0;
  int j = 0;
  std::vector<Int> expected;  // transition applied to the (i, j, ...) heights
  std::vector<Int> actual;    // heights read along (j, i, ...)
};

/// For every doubly-laced position (w, i, j) with w s_i > w and w s_j > w,
/// checks that the order-4 transition maps the midpoint heights along
/// w(i,j,i,j) to those along w(j,i,j,i).
std::vector<CoherenceFailure> check_doubly_laced_coherence(const BZDatum& m);

struct ValidityReport {
  EdgeReport edges;
  PluckerReport plucker;
  std::size_t coherence_checked = 0;
  std::vector<CoherenceFailure> coherence;
  bool ok() const { return edges.ok() && plucker.ok() && coherence.empty(); }
};

/// Edge inequalities, the simply-laced Pluecker relations, and order-4
/// transition coherence at doubly-laced positions.
ValidityReport validate(const BZDatum& m);

}  // namespace mv

#endif  // MVCRYSTAL_STRING_DATA_HPP
