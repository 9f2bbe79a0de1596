#include "mvcrystal/string_data.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "mvcrystal/error.hpp"

namespace mv {

std::vector<Int> midpoint_heights(const BZDatum& m, const ReducedWord& word) {
  const WordPath p = m.group().path(word);
  std::vector<Int> out(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) out[k] = m[p.before[k]] - m[p.after[k]];
  return out;
}

StringDatum kashiwara_datum(const BZDatum& m, const ReducedWord& word) {
  if (!in_B_lambda(m, top_vertex(m)))
    throw InvalidArgument("Kashiwara data need a polytope in B(lambda) for its top vertex lambda");
  StringDatum out{word, midpoint_heights(m, word)};
  for (Int v : out.p)
    if (v < 0) throw InvalidArgument("negative Kashiwara datum entry: not in B(lambda)");
  return out;
}

namespace {

// Cases keyed by (a_ij, a_ji) for the block's first letter i.
std::vector<Int> order4_first_short(Int q1, Int q2, Int q3, Int q4) {
  // a_ij = -1, a_ji = -2
  return {std::max({q4, q3 - q2, q2 - q1}),
          std::max({q3, q1 - 2 * q2 + 2 * q3, q1 + 2 * q4}),
          std::min({q2, 2 * q2 - q3 + q4, q4 + q1}),
          std::min({q1, 2 * q2 - q3, q3 - 2 * q4})};
}

std::vector<Int> order4_first_long(Int q1, Int q2, Int q3, Int q4) {
  // a_ij = -2, a_ji = -1
  return {std::max({q4, 2 * q3 - q2, q2 - 2 * q1}),
          std::max({q3, q1 - q2 + 2 * q3, q1 + q4}),
          std::min({q2, 2 * q2 - 2 * q3 + q4, q4 + 2 * q1}),
          std::min({q1, q2 - q3, q3 - q4})};
}

template <bool Swapped>
StringDatum transition(const WeylGroup& g, const StringDatum& in, const BraidMove& move) {
  const int i = move.first, j = move.second;
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  const int d = g.datum().braid_order(ui, uj);
  if (d == 6) throw UnsupportedType("no transition map for order-6 braid moves");
  if (d != move.order) throw InvalidArgument("braid move order does not match the Cartan matrix");
  const std::size_t k = move.position;
  if (in.p.size() != in.word.size()) throw InvalidArgument("string datum length does not match its word");
  if (k + static_cast<std::size_t>(d) > in.word.size())
    throw InvalidArgument("braid move runs past the end of the word");
  for (int t = 0; t < d; ++t)
    if (in.word[k + t] != (t % 2 == 0 ? i : j)) throw InvalidArgument("word has no such braid block");

  StringDatum out = in;
  for (int t = 0; t < d; ++t) out.word[k + t] = (t % 2 == 0 ? j : i);
  const Int* q = in.p.data() + k;
  std::vector<Int> block;
  if (d == 2) {
    block = {q[1], q[0]};
  } else if (d == 3) {
    block = {std::max(q[2], q[1] - q[0]), q[0] + q[2], std::min(q[0], q[1] - q[2])};
  } else {
    const bool first_short = g.datum().a(ui, uj) == -1;
    if (first_short != Swapped)
      block = order4_first_short(q[0], q[1], q[2], q[3]);
    else
      block = order4_first_long(q[0], q[1], q[2], q[3]);
  }
  std::copy(block.begin(), block.end(), out.p.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

template <bool Swapped>
BZDatum rebuild(const GroupPtr& group, const StringDatum& start, const Coweight& mu_e) {
  const WeylGroup& g = *group;
  if (start.p.size() != start.word.size()) throw InvalidArgument("string datum length does not match its word");
  for (Int v : start.p)
    if (v < 0) throw InvalidArgument("string data must be non-negative");
  if (mu_e.rank() != g.rank()) throw InvalidArgument("base vertex has the wrong rank");
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (g.datum().braid_order(i, j) == 6) throw UnsupportedType("no transition map for order-6 braid moves");

  std::vector<std::optional<Int>> m(g.num_chambers());
  std::size_t known = 0;
  auto assign = [&](ChamberId c, Int v) {
    if (m[c]) {
      if (*m[c] != v)
        throw Conflict("string reconstruction disagrees at chamber weight " + std::to_string(c) + ": " +
                       std::to_string(*m[c]) + " vs " + std::to_string(v));
      return;
    }
    m[c] = v;
    ++known;
  };
  for (std::size_t i = 0; i < g.rank(); ++i) assign(g.fundamental_chamber(static_cast<int>(i)), mu_e[i]);

  std::set<ReducedWord> seen{start.word};
  std::deque<StringDatum> queue{start};
  while (!queue.empty() && known < m.size()) {
    StringDatum cur = std::move(queue.front());
    queue.pop_front();
    const WordPath p = g.path(cur.word);
    for (std::size_t k = 0; k < cur.word.size(); ++k) {
      if (!m[p.before[k]]) throw Conflict("string reconstruction reached an unassigned chamber weight");
      assign(p.after[k], *m[p.before[k]] - cur.p[k]);
    }
    for (auto& nb : g.braid_neighbors(cur.word)) {
      if (!seen.insert(nb.word).second) continue;
      queue.push_back(transition<Swapped>(g, cur, nb.move));
    }
  }
  if (known < m.size()) throw Conflict("string reconstruction did not reach every chamber weight");
  std::vector<Int> values;
  values.reserve(m.size());
  for (const auto& v : m) values.push_back(*v);
  return BZDatum(group, std::move(values));
}

}  // namespace

StringDatum braid_transition(const WeylGroup& g, const StringDatum& p, const BraidMove& move) {
  return transition<false>(g, p, move);
}

BZDatum string_to_bz(const GroupPtr& group, const StringDatum& p, const Coweight& mu_e) {
  return rebuild<false>(group, p, mu_e);
}

namespace detail {

StringDatum braid_transition_swapped(const WeylGroup& g, const StringDatum& p, const BraidMove& move) {
  return transition<true>(g, p, move);
}

BZDatum string_to_bz_swapped(const GroupPtr& group, const StringDatum& p, const Coweight& mu_e) {
  return rebuild<true>(group, p, mu_e);
}

}  // namespace detail

namespace {

// Midpoint heights along w (a, b, a, b) starting at w.
std::vector<Int> local_heights(const BZDatum& m, ElementId w, int a, int b) {
  const WeylGroup& g = m.group();
  std::vector<Int> q;
  ElementId u = w;
  for (int t = 0; t < 4; ++t) {
    const int letter = t % 2 == 0 ? a : b;
    const ElementId next = g.times_simple(u, letter);
    q.push_back(m.at(u, letter) - m.at(next, letter));
    u = next;
  }
  return q;
}

}  // namespace

std::vector<CoherenceFailure> check_doubly_laced_coherence(const BZDatum& m) {
  const WeylGroup& g = m.group();
  const int r = static_cast<int>(g.rank());
  std::vector<CoherenceFailure> out;
  for (ElementId w = 0; w < g.size(); ++w)
    for (int i = 0; i < r; ++i) {
      if (g.descent(w, i, Side::Right)) continue;
      for (int j = 0; j < r; ++j) {
        if (i == j || g.descent(w, j, Side::Right)) continue;
        if (g.datum().braid_order(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != 4) continue;
        StringDatum local{{i, j, i, j}, local_heights(m, w, i, j)};
        const StringDatum moved = braid_transition(g, local, {0, i, j, 4});
        std::vector<Int> actual = local_heights(m, w, j, i);
        if (moved.p != actual) out.push_back({w, i, j, moved.p, std::move(actual)});
      }
    }
  return out;
}

ValidityReport validate(const BZDatum& m) {
  ValidityReport report;
  report.edges = check_edge_inequalities(m);
  report.plucker = check_all_plucker(m);
  report.coherence_checked = 2 * report.plucker.unsupported;
  report.coherence = check_doubly_laced_coherence(m);
  return report;
}

}  // namespace mv
