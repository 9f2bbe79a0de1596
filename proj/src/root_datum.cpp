#include "mvcrystal/root_datum.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mvcrystal/error.hpp"

namespace mv {

std::string to_string(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(ClassicalKind kind) {
  switch (kind) {
    case ClassicalKind::A: return "A";
    case ClassicalKind::C: return "C";
    case ClassicalKind::None: break;
  }
  return "none";
}

CartanMatrix::CartanMatrix(std::vector<std::vector<Int>> rows) : rank_(rows.size()) {
  if (rank_ == 0) throw InvalidArgument("Cartan matrix must have positive rank");
  a_.reserve(rank_ * rank_);
  for (const auto& row : rows) {
    if (row.size() != rank_) throw InvalidArgument("Cartan matrix must be square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  for (std::size_t i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 2) throw InvalidArgument("Cartan matrix diagonal entries must be 2");
    for (std::size_t j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) > 0) throw InvalidArgument("off-diagonal Cartan entries must be <= 0");
      if (((*this)(i, j) == 0) != ((*this)(j, i) == 0))
        throw InvalidArgument("Cartan matrix zero pattern must be symmetric");
    }
  }
}

std::vector<std::vector<Int>> CartanMatrix::rows() const {
  std::vector<std::vector<Int>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * rank_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank_));
  return out;
}

namespace {

// Closes the simple basis vectors under the reflections
// v -> v - <pairing_i, v> e_i, where the pairing is row (or column) i of the
// Cartan matrix.
template <class Pairing>
std::set<std::vector<Int>> reflection_closure(std::size_t rank, Pairing pairing) {
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> queue;
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<Int> v = queue[head];
      const Int p = pairing(i, v);
      if (p == 0) continue;
      v[i] -= p;
      if (seen.insert(v).second) {
        if (seen.size() > RootDatum::kRootCap)
          throw UnsupportedType("root closure exceeds cap: Cartan matrix is not of finite type");
        queue.push_back(std::move(v));
      }
    }
  }
  return seen;
}

bool all_nonnegative(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x >= 0; });
}

}  // namespace

RootDatum::RootDatum(CartanMatrix cartan, ClassicalKind kind)
    : cartan_(std::move(cartan)), kind_(kind) {
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      const Int prod = cartan_(i, j) * cartan_(j, i);
      if (prod == 3) throw UnsupportedType("type G2 is not supported");
      if (prod > 3) throw UnsupportedType("Cartan matrix is not of finite type");
    }

  auto roots = reflection_closure(r, [&](std::size_t i, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t k = 0; k < r; ++k) s += b[k] * cartan_(i, k);
    return s;
  });
  for (const auto& b : roots)
    if (all_nonnegative(b)) positive_roots_.push_back(b);

  auto coroots = reflection_closure(r, [&](std::size_t i, const std::vector<Int>& m) {
    Int s = 0;
    for (std::size_t k = 0; k < r; ++k) s += m[k] * cartan_(k, i);
    return s;
  });
  for (const auto& m : coroots)
    if (all_nonnegative(m)) positive_coroots_.emplace_back(m);

  if (kind_ == ClassicalKind::A && !(cartan_ == type_A(r).cartan()))
    throw InvalidArgument("classical labels A do not match the Cartan matrix");
  if (kind_ == ClassicalKind::C && (r < 2 || !(cartan_ == type_C(r).cartan())))
    throw InvalidArgument("classical labels C do not match the Cartan matrix");
}

RootDatum RootDatum::type_A(std::size_t rank) {
  if (rank < 1 || rank > 6) throw InvalidArgument("type A rank must be in 1..6");
  std::vector<std::vector<Int>> rows(rank, std::vector<Int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    rows[i][i] = 2;
    if (i + 1 < rank) rows[i][i + 1] = rows[i + 1][i] = -1;
  }
  RootDatum d(CartanMatrix(rows), ClassicalKind::None);
  d.kind_ = ClassicalKind::A;
  return d;
}

RootDatum RootDatum::type_C(std::size_t rank) {
  if (rank < 2 || rank > 4) throw InvalidArgument("type C rank must be in 2..4");
  std::vector<std::vector<Int>> rows(rank, std::vector<Int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    rows[i][i] = 2;
    if (i + 1 < rank) rows[i][i + 1] = rows[i + 1][i] = -1;
  }
  rows[rank - 2][rank - 1] = -2;
  RootDatum d(CartanMatrix(rows), ClassicalKind::None);
  d.kind_ = ClassicalKind::C;
  return d;
}

RootDatum RootDatum::from_name(const std::string& name) {
  if (name.size() >= 2 && std::string("ABCDEFG").find(name[0]) != std::string::npos) {
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
      n = std::stoul(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == name.size() - 1 && n >= 1) {
      if (name[0] == 'A' && n <= 6) return type_A(n);
      if (name[0] == 'C' && n >= 2 && n <= 4) return type_C(n);
      throw UnsupportedType("type " + name + " is not supported (A1..A6, C2..C4)");
    }
  }
  throw ParseError("unknown type name '" + name + "' (expected A1..A6 or C2..C4)");
}

std::string RootDatum::name() const {
  if (kind_ != ClassicalKind::None) return to_string(kind_) + std::to_string(rank());
  std::ostringstream os;
  os << "cartan[";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < rank(); ++j) os << (j ? "," : "") << a(i, j);
  }
  os << ']';
  return os.str();
}

bool RootDatum::is_simply_laced() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (i != j && a(i, j) * a(j, i) > 1) return false;
  return true;
}

int RootDatum::braid_order(std::size_t i, std::size_t j) const {
  if (i == j) return 1;
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

Weight RootDatum::fundamental_weight(std::size_t i) const {
  Weight w(rank());
  w[i] = 1;
  return w;
}

Weight RootDatum::simple_root(std::size_t j) const {
  Weight w(rank());
  for (std::size_t i = 0; i < rank(); ++i) w[i] = a(i, j);
  return w;
}

Coweight RootDatum::simple_coroot(std::size_t i) const {
  Coweight c(rank());
  c[i] = 1;
  return c;
}

Int RootDatum::pair(const Coweight& mu, const Weight& lam) const {
  Int s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += mu[i] * lam[i];
  return s;
}

Int RootDatum::pair_root(const Coweight& mu, std::size_t i) const {
  Int s = 0;
  for (std::size_t k = 0; k < rank(); ++k) s += mu[k] * a(k, i);
  return s;
}

Weight RootDatum::reflect_weight(std::size_t i, const Weight& lam) const {
  Weight out = lam;
  const Int c = lam[i];
  if (c != 0)
    for (std::size_t k = 0; k < rank(); ++k) out[k] -= c * a(k, i);
  return out;
}

Coweight RootDatum::reflect_coweight(std::size_t i, const Coweight& mu) const {
  Coweight out = mu;
  out[i] -= pair_root(mu, i);
  return out;
}

Coweight RootDatum::two_rho_vee() const {
  Coweight s(rank());
  for (const auto& c : positive_coroots_) s += c;
  return s;
}

bool RootDatum::is_dominant(const Coweight& mu) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (pair_root(mu, i) < 0) return false;
  return true;
}

bool RootDatum::is_nonnegative(const Coweight& mu) { return all_nonnegative(mu.coords()); }

void RootDatum::require_classical() const {
  if (kind_ == ClassicalKind::None)
    throw InvalidArgument("root datum " + name() + " has no classical coordinates");
}

std::size_t RootDatum::classical_dimension() const {
  require_classical();
  return kind_ == ClassicalKind::A ? rank() + 1 : rank();
}

Weight RootDatum::weight_from_classical(const std::vector<Int>& x) const {
  const std::size_t n = classical_dimension();
  if (x.size() != n)
    throw InvalidArgument("classical weight must have " + std::to_string(n) + " entries");
  Weight w(rank());
  for (std::size_t i = 0; i + 1 < n; ++i) w[i] = x[i] - x[i + 1];
  if (kind_ == ClassicalKind::C) w[n - 1] = x[n - 1];
  return w;
}

std::vector<Int> RootDatum::weight_to_classical(const Weight& lam) const {
  const std::size_t n = classical_dimension();
  std::vector<Int> x(n, 0);
  if (kind_ == ClassicalKind::C) x[n - 1] = lam[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) x[k] = x[k + 1] + lam[k];
  if (kind_ == ClassicalKind::A) {
    const Int lo = *std::min_element(x.begin(), x.end());
    for (auto& v : x) v -= lo;
  }
  return x;
}

Coweight RootDatum::coweight_from_classical(const std::vector<Int>& x) const {
  const std::size_t n = classical_dimension();
  if (x.size() != n)
    throw InvalidArgument("classical coweight must have " + std::to_string(n) + " entries");
  Int total = 0;
  Coweight mu(rank());
  for (std::size_t k = 0; k < n; ++k) {
    total += x[k];
    if (k < rank()) mu[k] = total;
  }
  if (kind_ == ClassicalKind::A && total != 0)
    throw InvalidArgument("type A classical coweights must sum to zero");
  return mu;
}

std::vector<Int> RootDatum::coweight_to_classical(const Coweight& mu) const {
  const std::size_t n = classical_dimension();
  std::vector<Int> x(n, 0);
  Int prev = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Int cur = k < rank() ? mu[k] : 0;
    x[k] = cur - prev;
    prev = cur;
  }
  return x;
}

}  // namespace mv
