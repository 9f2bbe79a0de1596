#include "mvcrystal/weyl.hpp"

#include <algorithm>
#include <mutex>

#include "mvcrystal/error.hpp"

namespace mv {

namespace {

using Matrix = std::vector<Int>;

Matrix multiply(const Matrix& x, const Matrix& y, std::size_t r) {
  Matrix out(r * r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      const Int v = x[i * r + k];
      if (v == 0) continue;
      for (std::size_t j = 0; j < r; ++j) out[i * r + j] += v * y[k * r + j];
    }
  return out;
}

Matrix identity_matrix(std::size_t r) {
  Matrix m(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

std::vector<Int> apply(const Matrix& m, const std::vector<Int>& v, std::size_t r) {
  std::vector<Int> out(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) out[i] += m[i * r + k] * v[k];
  return out;
}

}  // namespace

WeylGroup::WeylGroup(RootDatum datum, std::size_t cap) : datum_(std::move(datum)) {
  const std::size_t r = rank();

  // Simple reflections on weights (fundamental basis) and coweights (coroot basis).
  std::vector<Matrix> sw(r), sc(r);
  for (std::size_t i = 0; i < r; ++i) {
    sw[i] = identity_matrix(r);
    sc[i] = identity_matrix(r);
    for (std::size_t k = 0; k < r; ++k) {
      sw[i][k * r + i] -= datum_.a(k, i);
      sc[i][i * r + k] -= datum_.a(k, i);
    }
  }

  std::map<Matrix, ElementId> index;
  wmat_.push_back(identity_matrix(r));
  cmat_.push_back(identity_matrix(r));
  length_.push_back(0);
  words_.emplace_back();
  index.emplace(wmat_[0], 0);
  for (ElementId head = 0; head < wmat_.size(); ++head) {
    for (std::size_t i = 0; i < r; ++i) {
      Matrix next = multiply(wmat_[head], sw[i], r);
      if (index.count(next)) continue;
      if (wmat_.size() >= cap) throw CapExceeded("Weyl group exceeds element cap");
      index.emplace(next, wmat_.size());
      wmat_.push_back(std::move(next));
      cmat_.push_back(multiply(cmat_[head], sc[i], r));
      length_.push_back(length_[head] + 1);
      ReducedWord word = words_[head];
      word.push_back(static_cast<int>(i));
      words_.push_back(std::move(word));
    }
  }

  const std::size_t n = wmat_.size();
  right_.resize(n * r);
  left_.resize(n * r);
  for (ElementId w = 0; w < n; ++w)
    for (std::size_t i = 0; i < r; ++i) {
      right_[w * r + i] = index.at(multiply(wmat_[w], sw[i], r));
      left_[w * r + i] = index.at(multiply(sw[i], wmat_[w], r));
    }
  longest_ = static_cast<ElementId>(
      std::max_element(length_.begin(), length_.end()) - length_.begin());

  // Chamber weights: level-major, and within a level in order of first
  // appearance along the BFS order of W (so Lambda_i comes first).
  chamber_table_.assign(n * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (ElementId w = 0; w < n; ++w) {
      std::vector<Int> col(r);
      for (std::size_t k = 0; k < r; ++k) col[k] = wmat_[w][k * r + i];
      auto it = chamber_index_.find(col);
      if (it == chamber_index_.end()) {
        it = chamber_index_.emplace(col, chambers_.size()).first;
        chambers_.push_back({Weight(col), i});
      } else if (chambers_[it->second].level != i) {
        throw InvalidArgument("chamber weight orbits of distinct levels intersect");
      }
      chamber_table_[w * r + i] = it->second;
    }
  }

  const std::size_t nc = chambers_.size();
  negative_.resize(nc);
  reflect_.resize(nc * r);
  for (ChamberId c = 0; c < nc; ++c) {
    negative_[c] = chamber_index_.at((-chambers_[c].weight).coords());
    for (std::size_t j = 0; j < r; ++j)
      reflect_[c * r + j] =
          chamber_index_.at(datum_.reflect_weight(j, chambers_[c].weight).coords());
  }

  relative_.assign(r, std::vector<bool>(nc, false));
  splits_.resize(r);
  for (std::size_t j = 0; j < r; ++j) {
    for (ElementId w = 0; w < n; ++w) {
      if (!descent(w, static_cast<int>(j), Side::Left)) continue;
      for (std::size_t i = 0; i < r; ++i) relative_[j][chamber_of(w, static_cast<int>(i))] = true;
    }
    for (ChamberId c = 0; c < nc; ++c)
      (relative_[j][c] ? splits_[j].relative : splits_[j].complement).push_back(c);
  }

  eta_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Weight image = -act(longest_, datum_.simple_root(i));
    eta_[i] = -1;
    for (std::size_t j = 0; j < r; ++j)
      if (datum_.simple_root(j) == image) eta_[i] = static_cast<int>(j);
    if (eta_[i] < 0) throw InvalidArgument("-w0 does not permute the simple roots");
  }
}

bool WeylGroup::descent(ElementId w, int i, Side side) const {
  const ElementId other = side == Side::Right ? times_simple(w, i) : simple_times(i, w);
  return length_[other] < length_[w];
}

ElementId WeylGroup::product(const ReducedWord& word) const {
  ElementId w = identity();
  for (int i : word) {
    if (i < 0 || static_cast<std::size_t>(i) >= rank())
      throw InvalidArgument("word letter out of range");
    w = times_simple(w, i);
  }
  return w;
}

bool WeylGroup::is_reduced(const ReducedWord& word) const {
  return static_cast<std::size_t>(length(product(word))) == word.size();
}

Weight WeylGroup::act(ElementId w, const Weight& lam) const {
  return Weight(apply(wmat_[w], lam.coords(), rank()));
}

Coweight WeylGroup::act(ElementId w, const Coweight& mu) const {
  return Coweight(apply(cmat_[w], mu.coords(), rank()));
}

std::vector<Int> WeylGroup::weight_matrix(ElementId w) const { return wmat_[w]; }

std::optional<ChamberId> WeylGroup::find_chamber(const Weight& lam) const {
  auto it = chamber_index_.find(lam.coords());
  if (it == chamber_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

ReducedWord greedy_completion(const WeylGroup& g, ReducedWord word) {
  ElementId w = g.product(word);
  while (w != g.longest()) {
    for (std::size_t i = 0; i < g.rank(); ++i) {
      if (!g.descent(w, static_cast<int>(i), Side::Right)) {
        word.push_back(static_cast<int>(i));
        w = g.times_simple(w, static_cast<int>(i));
        break;
      }
    }
  }
  return word;
}

}  // namespace

ReducedWord WeylGroup::lex_least_word() const { return greedy_completion(*this, {}); }

ReducedWord WeylGroup::word_starting_with(int j) const {
  if (j < 0 || static_cast<std::size_t>(j) >= rank()) throw InvalidArgument("node out of range");
  return greedy_completion(*this, {j});
}

std::vector<ReducedWord> WeylGroup::reduced_words_w0(std::size_t max_rank,
                                                     std::size_t max_words) const {
  if (rank() > max_rank)
    throw CapExceeded("reduced-word enumeration is capped at rank " + std::to_string(max_rank));
  std::vector<ReducedWord> out;
  ReducedWord word;
  std::vector<ElementId> stack{identity()};
  const std::size_t m = num_positive_roots();
  // Iterative DFS over ascents; `next` holds the next letter to try per depth.
  std::vector<int> next{0};
  while (!next.empty()) {
    const std::size_t depth = word.size();
    if (depth == m) {
      if (out.size() >= max_words) throw CapExceeded("reduced-word count exceeds cap");
      out.push_back(word);
      next.pop_back();
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    int& letter = next.back();
    const ElementId w = stack.back();
    while (letter < static_cast<int>(rank()) && descent(w, letter, Side::Right)) ++letter;
    if (letter == static_cast<int>(rank())) {
      next.pop_back();
      stack.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    const int i = letter++;
    word.push_back(i);
    stack.push_back(times_simple(w, i));
    next.push_back(0);
  }
  return out;
}

std::vector<BraidNeighbor> WeylGroup::braid_neighbors(const ReducedWord& word) const {
  std::vector<BraidNeighbor> out;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const int a = word[k], b = word[k + 1];
    if (a == b) continue;
    const int d = datum_.braid_order(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    if (k + static_cast<std::size_t>(d) > word.size()) continue;
    bool block = true;
    for (int t = 0; t < d && block; ++t) block = word[k + t] == (t % 2 == 0 ? a : b);
    if (!block) continue;
    ReducedWord flipped = word;
    for (int t = 0; t < d; ++t) flipped[k + t] = (t % 2 == 0 ? b : a);
    out.push_back({std::move(flipped), {k, a, b, d}});
  }
  return out;
}

WordPath WeylGroup::path(const ReducedWord& word) const {
  if (word.size() != num_positive_roots() || !is_reduced(word))
    throw InvalidArgument("not a reduced word for w0: " +
                          to_string(std::vector<Int>(word.begin(), word.end())));
  WordPath p;
  p.word = word;
  p.prefix.reserve(word.size() + 1);
  p.prefix.push_back(identity());
  for (int i : word) {
    const ElementId prev = p.prefix.back();
    const ElementId cur = times_simple(prev, i);
    p.before.push_back(chamber_of(prev, i));
    p.after.push_back(chamber_of(cur, i));
    p.prefix.push_back(cur);
  }
  return p;
}

GroupPtr make_group(const RootDatum& datum) {
  static std::mutex mutex;
  static std::map<std::pair<std::vector<std::vector<Int>>, ClassicalKind>, std::weak_ptr<const WeylGroup>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(datum.cartan().rows(), datum.kind());
  if (auto it = cache.find(key); it != cache.end())
    if (auto g = it->second.lock()) return g;
  auto g = std::make_shared<const WeylGroup>(datum);
  cache[key] = g;
  return g;
}

GroupPtr make_group(const std::string& type_name) { return make_group(RootDatum::from_name(type_name)); }

}  // namespace mv
