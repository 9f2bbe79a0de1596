#ifndef MVCRYSTAL_WEYL_HPP
#define MVCRYSTAL_WEYL_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "mvcrystal/root_datum.hpp"

namespace mv {

using ElementId = std::size_t;
using ChamberId = std::size_t;
/// Letters are 0-based node indices.
using ReducedWord = std::vector<int>;

enum class Side { Left, Right };

/// w . Lambda_level.
struct ChamberWeight {
  Weight weight;
  std::size_t level = 0;
};

/// A braid move flipping the alternating block (a, b, a, ...) of length
/// `order` that starts at 0-based `position`.
struct BraidMove {
  std::size_t position = 0;
  int first = 0;
  int second = 0;
  int order = 0;
};

struct BraidNeighbor {
  ReducedWord word;
  BraidMove move;
};

/// Prefixes w_0 = e, w_1, ..., w_m of a reduced word for w_0 together with
/// the chamber weights w_{k-1} Lambda_{i_k} and w_k Lambda_{i_k} read along
/// the path.
struct WordPath {
  ReducedWord word;
  std::vector<ElementId> prefix;      // size m + 1
  std::vector<ChamberId> before;      // w_{k-1} . Lambda_{i_k}, size m
  std::vector<ChamberId> after;       // w_k . Lambda_{i_k}, size m
};

/// Gamma^j = {w Lambda_i : s_j w < w} and its complement Gamma_j.
struct GammaSplit {
  std::vector<ChamberId> relative;    // Gamma^j
  std::vector<ChamberId> complement;  // Gamma_j
};

/// The Weyl group of a root datum, enumerated once, with the chamber weights
/// and the lookup tables every other module indexes by.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 100000;

  explicit WeylGroup(RootDatum datum, std::size_t cap = kDefaultCap);

  const RootDatum& datum() const { return datum_; }
  std::size_t rank() const { return datum_.rank(); }
  std::size_t size() const { return length_.size(); }

  ElementId identity() const { return 0; }
  ElementId longest() const { return longest_; }
  /// l(w_0), the number of positive roots.
  std::size_t num_positive_roots() const { return static_cast<std::size_t>(length_[longest_]); }

  int length(ElementId w) const { return length_[w]; }
  ElementId times_simple(ElementId w, int i) const { return right_[w * rank() + i]; }
  ElementId simple_times(int i, ElementId w) const { return left_[w * rank() + i]; }
  bool descent(ElementId w, int i, Side side) const;
  /// Some reduced word of w (BFS-lexicographic).
  const ReducedWord& reduced_word(ElementId w) const { return words_[w]; }
  /// s_{i_1} ... s_{i_k}; the word need not be reduced.
  ElementId product(const ReducedWord& word) const;
  bool is_reduced(const ReducedWord& word) const;

  Weight act(ElementId w, const Weight& lam) const;
  Coweight act(ElementId w, const Coweight& mu) const;
  /// Weight-coordinate matrix of w; column i is w . Lambda_i.
  std::vector<Int> weight_matrix(ElementId w) const;

  std::size_t num_chambers() const { return chambers_.size(); }
  const ChamberWeight& chamber(ChamberId c) const { return chambers_[c]; }
  const std::vector<ChamberWeight>& chambers() const { return chambers_; }
  ChamberId chamber_of(ElementId w, int i) const { return chamber_table_[w * rank() + i]; }
  ChamberId fundamental_chamber(int i) const { return chamber_of(identity(), i); }
  std::optional<ChamberId> find_chamber(const Weight& lam) const;
  ChamberId negative(ChamberId c) const { return negative_[c]; }
  /// s_j . gamma.
  ChamberId reflect(int j, ChamberId c) const { return reflect_[c * rank() + j]; }

  const GammaSplit& gamma_split(int j) const { return splits_[j]; }
  bool is_relative(int j, ChamberId c) const { return relative_[j][c]; }

  /// eta with -w_0 alpha_i = alpha_{eta(i)}.
  const std::vector<int>& dynkin_involution() const { return eta_; }

  ReducedWord lex_least_word() const;
  /// Lexicographically least reduced word of w_0 beginning with j.
  ReducedWord word_starting_with(int j) const;
  /// Every reduced word of w_0, lexicographically sorted. Throws CapExceeded
  /// when the rank exceeds `max_rank` or the count exceeds `max_words`.
  std::vector<ReducedWord> reduced_words_w0(std::size_t max_rank = 5,
                                            std::size_t max_words = 1000000) const;
  std::vector<BraidNeighbor> braid_neighbors(const ReducedWord& word) const;
  /// Throws InvalidArgument unless `word` is a reduced word for w_0.
  WordPath path(const ReducedWord& word) const;

 private:
  RootDatum datum_;
  std::vector<int> length_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ReducedWord> words_;
  std::vector<std::vector<Int>> wmat_;   // weight action, row-major r x r
  std::vector<std::vector<Int>> cmat_;   // coweight action, row-major r x r
  ElementId longest_ = 0;

  std::vector<ChamberWeight> chambers_;
  std::map<std::vector<Int>, ChamberId> chamber_index_;
  std::vector<ChamberId> chamber_table_;
  std::vector<ChamberId> negative_;
  std::vector<ChamberId> reflect_;
  std::vector<GammaSplit> splits_;
  std::vector<std::vector<bool>> relative_;
  std::vector<int> eta_;
};

using GroupPtr = std::shared_ptr<const WeylGroup>;

/// Shared, cached group for a root datum (one instance per Cartan matrix and
/// classical kind).
GroupPtr make_group(const RootDatum& datum);
GroupPtr make_group(const std::string& type_name);

}  // namespace mv

#endif  // MVCRYSTAL_WEYL_HPP
