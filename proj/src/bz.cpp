#include "mvcrystal/bz.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "mvcrystal/error.hpp"

namespace mv {

BZDatum::BZDatum(GroupPtr group, std::vector<Int> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw InvalidArgument("BZ datum needs a Weyl group");
  if (values_.size() != group_->num_chambers())
    throw InvalidArgument("BZ datum must have one value per chamber weight (" +
                          std::to_string(group_->num_chambers()) + ")");
}

BZDatum BZDatum::constant(GroupPtr group, Int value) {
  const std::size_t n = group->num_chambers();
  return BZDatum(std::move(group), std::vector<Int>(n, value));
}

Int BZDatum::at(const Weight& gamma) const {
  auto c = group_->find_chamber(gamma);
  if (!c) throw InvalidArgument("not a chamber weight: " + to_string(gamma.coords()));
  return values_[*c];
}

Coweight vertex(const BZDatum& m, ElementId w) {
  const WeylGroup& g = m.group();
  Coweight base(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) base[i] = m.at(w, static_cast<int>(i));
  return g.act(w, base);
}

std::vector<Coweight> vertices(const BZDatum& m) {
  std::vector<Coweight> out;
  out.reserve(m.group().size());
  for (ElementId w = 0; w < m.group().size(); ++w) out.push_back(vertex(m, w));
  return out;
}

Coweight bottom_vertex(const BZDatum& m) { return vertex(m, m.group().identity()); }
Coweight top_vertex(const BZDatum& m) { return vertex(m, m.group().longest()); }

std::vector<Coweight> vertex_set(const BZDatum& m) {
  auto v = vertices(m);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Int edge_length(const BZDatum& m, ElementId w, int i) {
  const WeylGroup& g = m.group();
  Int n = -m.at(w, i) - m.at(g.times_simple(w, i), i);
  for (std::size_t j = 0; j < g.rank(); ++j) {
    if (static_cast<int>(j) == i) continue;
    n -= g.datum().a(j, static_cast<std::size_t>(i)) * m.at(w, static_cast<int>(j));
  }
  return n;
}

EdgeReport check_edge_inequalities(const BZDatum& m) {
  const WeylGroup& g = m.group();
  EdgeReport report;
  for (ElementId w = 0; w < g.size(); ++w)
    for (std::size_t i = 0; i < g.rank(); ++i) {
      ++report.checked;
      const Int n = edge_length(m, w, static_cast<int>(i));
      if (n < 0) report.violations.push_back({w, static_cast<int>(i), n});
    }
  return report;
}

PluckerResult check_tropical_plucker(const BZDatum& m, ElementId w, int i, int j) {
  const WeylGroup& g = m.group();
  if (i == j) throw InvalidArgument("tropical Pluecker relation needs i != j");
  if (g.descent(w, i, Side::Right) || g.descent(w, j, Side::Right))
    throw InvalidArgument("tropical Pluecker relation needs w s_i > w and w s_j > w");
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  const Int prod = g.datum().a(ui, uj) * g.datum().a(uj, ui);
  if (prod == 0) return {PluckerStatus::Holds, 0, 0};
  if (prod != 1) return {PluckerStatus::Unsupported, 0, 0};
  const ElementId wi = g.times_simple(w, i), wj = g.times_simple(w, j);
  const Int lhs = m.at(wi, i) + m.at(wj, j);
  const Int rhs = std::min(m.at(w, i) + m.at(g.times_simple(wi, j), j),
                           m.at(g.times_simple(wj, i), i) + m.at(w, j));
  return {lhs == rhs ? PluckerStatus::Holds : PluckerStatus::Fails, lhs, rhs};
}

PluckerReport check_all_plucker(const BZDatum& m) {
  const WeylGroup& g = m.group();
  PluckerReport report;
  const int r = static_cast<int>(g.rank());
  for (ElementId w = 0; w < g.size(); ++w)
    for (int i = 0; i < r; ++i) {
      if (g.descent(w, i, Side::Right)) continue;
      for (int j = i + 1; j < r; ++j) {
        if (g.descent(w, j, Side::Right)) continue;
        const Int prod = g.datum().a(i, j) * g.datum().a(j, i);
        if (prod == 0) {
          ++report.vacuous;
          continue;
        }
        if (prod != 1) {
          ++report.unsupported;
          continue;
        }
        ++report.checked;
        const PluckerResult res = check_tropical_plucker(m, w, i, j);
        if (res.status == PluckerStatus::Fails) report.failures.push_back({w, i, j, res.lhs, res.rhs});
      }
    }
  return report;
}

LusztigDatum lusztig_datum(const BZDatum& m, const ReducedWord& word) {
  const WordPath p = m.group().path(word);
  LusztigDatum out{word, {}};
  out.n.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) out.n.push_back(edge_length(m, p.prefix[k], word[k]));
  return out;
}

Coweight lusztig_weight(const WeylGroup& g, const LusztigDatum& n) {
  const WordPath p = g.path(n.word);
  if (n.n.size() != n.word.size()) throw InvalidArgument("Lusztig datum length does not match its word");
  Coweight total(g.rank());
  for (std::size_t k = 0; k < n.word.size(); ++k)
    total += n.n[k] * g.act(p.prefix[k], g.datum().simple_coroot(static_cast<std::size_t>(n.word[k])));
  return total;
}

namespace {

// Partially known BZ datum with exact-equality conflict detection.
class PartialDatum {
 public:
  explicit PartialDatum(std::size_t n) : values_(n) {}

  void set(ChamberId c, Int v) {
    if (values_[c]) {
      if (*values_[c] != v)
        throw Conflict("two derivations disagree at chamber weight " + std::to_string(c) + ": " +
                       std::to_string(*values_[c]) + " vs " + std::to_string(v));
      return;
    }
    values_[c] = v;
    ++known_;
  }
  Int get(ChamberId c) const {
    if (!values_[c]) throw Conflict("propagation reached an unassigned chamber weight");
    return *values_[c];
  }
  bool complete() const { return known_ == values_.size(); }
  std::vector<Int> take() const {
    std::vector<Int> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(*v);
    return out;
  }

 private:
  std::vector<std::optional<Int>> values_;
  std::size_t known_ = 0;
};

}  // namespace

BZDatum bz_from_lusztig(const GroupPtr& group, const LusztigDatum& n, const Coweight& mu_e) {
  const WeylGroup& g = *group;
  if (!g.datum().is_simply_laced())
    throw UnsupportedType("Lusztig-datum propagation needs a simply-laced type");
  if (n.n.size() != n.word.size()) throw InvalidArgument("Lusztig datum length does not match its word");
  for (Int v : n.n)
    if (v < 0) throw InvalidArgument("Lusztig data must be non-negative");
  if (mu_e.rank() != g.rank()) throw InvalidArgument("base vertex has the wrong rank");

  const WordPath path = g.path(n.word);
  PartialDatum m(g.num_chambers());
  Coweight mu = mu_e;
  for (std::size_t k = 0; k <= n.word.size(); ++k) {
    const ElementId w = path.prefix[k];
    if (k > 0)
      mu += n.n[k - 1] *
            g.act(path.prefix[k - 1], g.datum().simple_coroot(static_cast<std::size_t>(n.word[k - 1])));
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const ChamberId c = g.chamber_of(w, static_cast<int>(i));
      m.set(c, g.datum().pair(mu, g.chamber(c).weight));
    }
  }

  std::set<ReducedWord> seen{n.word};
  std::deque<ReducedWord> queue{n.word};
  while (!queue.empty() && !m.complete()) {
    const ReducedWord word = std::move(queue.front());
    queue.pop_front();
    const WordPath p = g.path(word);
    for (auto& nb : g.braid_neighbors(word)) {
      if (nb.move.order == 3) {
        const ElementId w = p.prefix[nb.move.position];
        const int a = nb.move.first, b = nb.move.second;
        const ElementId wa = g.times_simple(w, a), wb = g.times_simple(w, b);
        const Int rhs = std::min(m.get(g.chamber_of(w, a)) + m.get(g.chamber_of(g.times_simple(wa, b), b)),
                                 m.get(g.chamber_of(g.times_simple(wb, a), a)) + m.get(g.chamber_of(w, b)));
        m.set(g.chamber_of(wb, b), rhs - m.get(g.chamber_of(wa, a)));
      }
      if (seen.insert(nb.word).second) queue.push_back(std::move(nb.word));
    }
  }
  if (!m.complete()) throw Conflict("braid propagation did not reach every chamber weight");
  return BZDatum(group, m.take());
}

BZDatum negate(const BZDatum& m) {
  const WeylGroup& g = m.group();
  std::vector<Int> out(g.num_chambers());
  for (ChamberId c = 0; c < out.size(); ++c) out[c] = m[g.negative(c)];
  return BZDatum(m.group_ptr(), std::move(out));
}

BZDatum translate(const BZDatum& m, const Coweight& nu) {
  const WeylGroup& g = m.group();
  std::vector<Int> out = m.values();
  for (ChamberId c = 0; c < out.size(); ++c) out[c] += g.datum().pair(nu, g.chamber(c).weight);
  return BZDatum(m.group_ptr(), std::move(out));
}

BZDatum stable_normalize(const BZDatum& m) { return translate(m, -top_vertex(m)); }

bool is_stable_normal(const BZDatum& m) { return top_vertex(m).is_zero(); }

bool contains(const BZDatum& m, const Coweight& x) {
  const WeylGroup& g = m.group();
  for (ChamberId c = 0; c < g.num_chambers(); ++c)
    if (g.datum().pair(x, g.chamber(c).weight) < m[c]) return false;
  return true;
}

bool polytope_contains(const BZDatum& outer, const BZDatum& inner) {
  for (ChamberId c = 0; c < outer.size(); ++c)
    if (inner[c] < outer[c]) return false;
  return true;
}

BZDatum point_polytope(const GroupPtr& group, const Coweight& lam) {
  return translate(BZDatum::constant(group, 0), lam);
}

BZDatum lowest_polytope(const GroupPtr& group, const Coweight& lam) {
  const WeylGroup& g = *group;
  const Coweight low = g.act(g.longest(), lam);
  std::vector<Int> out(g.num_chambers());
  for (ChamberId c = 0; c < out.size(); ++c) out[c] = low[g.chamber(c).level];
  return BZDatum(group, std::move(out));
}

namespace {

void require_top(const BZDatum& m, const Coweight& lam) {
  if (top_vertex(m) != lam)
    throw InvalidArgument("top vertex " + to_string(top_vertex(m).coords()) + " differs from lambda " +
                          to_string(lam.coords()));
}

}  // namespace

bool in_B_lambda(const BZDatum& m, const Coweight& lam) {
  require_top(m, lam);
  const WeylGroup& g = m.group();
  if (!g.datum().is_dominant(lam)) return false;
  const Coweight low = g.act(g.longest(), lam);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const int ii = static_cast<int>(i);
    if (m.at(g.times_simple(g.longest(), ii), ii) < low[i]) return false;
  }
  return true;
}

bool in_B_lambda_hull(const BZDatum& m, const Coweight& lam) {
  require_top(m, lam);
  if (!m.group().datum().is_dominant(lam)) return false;
  return polytope_contains(lowest_polytope(m.group_ptr(), lam), m);
}

Int height(const Coweight& mu) {
  Int s = 0;
  for (Int x : mu.coords()) s += x;
  return s;
}

Int depth(const BZDatum& m) { return height(top_vertex(m) - bottom_vertex(m)); }

}  // namespace mv
