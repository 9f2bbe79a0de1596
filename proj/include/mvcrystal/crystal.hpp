#ifndef MVCRYSTAL_CRYSTAL_HPP
#define MVCRYSTAL_CRYSTAL_HPP

#include <optional>
#include <vector>

#include "mvcrystal/bz.hpp"
#include "mvcrystal/string_data.hpp"

namespace mv {

/// Lusztig: edit the Lusztig datum of a j-first word and propagate
/// (simply-laced only). String: embed in some B(lambda), edit the Kashiwara
/// datum, rebuild. Auto picks Lusztig when the type is simply laced.
enum class Route { Auto, Lusztig, String };

/// f_j. Keeps mu_{w_0}, moves mu_e by -alpha_j^vee.
BZDatum f(const BZDatum& m, int j, Route route = Route::Auto);
/// e_j, or nullopt when mu_e = mu_{s_j}. Keeps mu_{w_0}.
std::optional<BZDatum> e(const BZDatum& m, int j, Route route = Route::Auto);
/// * . f_j . *. Keeps mu_e, moves mu_{w_0} by +alpha_j^vee.
BZDatum f_star(const BZDatum& m, int j, Route route = Route::Auto);
std::optional<BZDatum> e_star(const BZDatum& m, int j, Route route = Route::Auto);

/// Element of B(infinity): a stable-normal BZ datum.
struct CrystalElement {
  BZDatum bz;
  Coweight weight;  // mu_e
};

CrystalElement make_element(const BZDatum& m);
CrystalElement f(const CrystalElement& b, int j, Route route = Route::Auto);
std::optional<CrystalElement> e(const CrystalElement& b, int j, Route route = Route::Auto);
CrystalElement f_star(const CrystalElement& b, int j, Route route = Route::Auto);
std::optional<CrystalElement> e_star(const CrystalElement& b, int j, Route route = Route::Auto);

struct CrystalEdge {
  std::size_t from = 0;
  int j = 0;
  std::size_t to = 0;

  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

/// Nodes sorted by (depth, values); edges (b, j, f_j b) sorted.
struct CrystalGraph {
  GroupPtr group;
  std::vector<BZDatum> nodes;
  std::vector<CrystalEdge> edges;
  std::size_t root = 0;

  std::optional<std::size_t> find(const BZDatum& m) const;
};

/// Default 100000, overridden by the MVCRYSTAL_NODE_CAP environment variable.
std::size_t default_node_cap();

/// B(lam) for dominant lam, grown from the point polytope by f_j while the
/// result stays in B(lam).
CrystalGraph crystal_graph_lambda(const GroupPtr& group, const Coweight& lam,
                                  std::size_t cap = default_node_cap(), Route route = Route::Auto);

/// Elements of B(infinity) of depth <= `max_depth` (stable-normal).
CrystalGraph binf_enumerate(const GroupPtr& group, int max_depth, std::size_t cap = default_node_cap(),
                            Route route = Route::Auto);

/// Stable-normal BZ data with lex-least-word Lusztig datum of entry sum
/// <= `max_sum`, sorted canonically. Simply-laced only.
std::vector<BZDatum> lusztig_corpus(const GroupPtr& group, int max_sum);

/// Sorts by (depth, values).
void canonical_sort(std::vector<BZDatum>& data);

}  // namespace mv

#endif  // MVCRYSTAL_CRYSTAL_HPP
