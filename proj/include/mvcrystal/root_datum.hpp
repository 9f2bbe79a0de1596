#ifndef MVCRYSTAL_ROOT_DATUM_HPP
#define MVCRYSTAL_ROOT_DATUM_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace mv {

using Int = std::int64_t;

/// Integer vector of fixed rank tagged with the lattice it lives in, so that
/// weights and coweights cannot be mixed up.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Int> coords) : coords_(coords) {}

  std::size_t rank() const { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Int>& coords() const { return coords_; }

  LatticeVector& operator+=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }
  friend LatticeVector operator*(Int s, LatticeVector a) {
    for (auto& x : a.coords_) x *= s;
    return a;
  }
  bool is_zero() const {
    for (Int x : coords_)
      if (x != 0) return false;
    return true;
  }

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<Int> coords_;
};

struct WeightTag {};
struct CoweightTag {};

/// Element of X^*, stored in the fundamental-weight basis: coords are the
/// pairings with the simple coroots.
using Weight = LatticeVector<WeightTag>;
/// Element of X_* (the coroot lattice), stored in the simple-coroot basis.
using Coweight = LatticeVector<CoweightTag>;

template <class Tag>
std::ostream& operator<<(std::ostream& os, const LatticeVector<Tag>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.rank(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::string to_string(const std::vector<Int>& v);

/// a(i, j) = <alpha_i^vee, alpha_j>.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Validates the generalized-Cartan shape (diagonal, signs, zero pattern);
  /// throws InvalidArgument on violation.
  explicit CartanMatrix(std::vector<std::vector<Int>> rows);

  std::size_t rank() const { return rank_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * rank_ + j]; }
  std::vector<std::vector<Int>> rows() const;

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Int> a_;
};

/// Which classical coordinate system (if any) the datum is embedded in.
enum class ClassicalKind { None, A, C };

std::string to_string(ClassicalKind kind);

struct ClassicalCoords {
  ClassicalKind kind = ClassicalKind::None;
  std::vector<Int> vector;
};

/// Cartan data of a finite type, G2 excluded, with the derived root systems.
class RootDatum {
 public:
  static constexpr std::size_t kRootCap = 10000;

  /// Throws UnsupportedType for G2 or for Cartan matrices whose root closure
  /// exceeds kRootCap (non-finite type).
  explicit RootDatum(CartanMatrix cartan, ClassicalKind kind = ClassicalKind::None);

  /// Type A_{n-1}, 2 <= n <= 7 (the classical embedding into Z^n).
  static RootDatum type_A(std::size_t rank);
  /// Type C_n, 2 <= n <= 4, carrying the signed-coordinate embedding with
  /// alpha_n = 2 e_n and alpha_n^vee = e_n.
  static RootDatum type_C(std::size_t rank);
  /// Accepts "A1".."A6", "C2".."C4".
  static RootDatum from_name(const std::string& name);

  std::size_t rank() const { return cartan_.rank(); }
  const CartanMatrix& cartan() const { return cartan_; }
  Int a(std::size_t i, std::size_t j) const { return cartan_(i, j); }
  ClassicalKind kind() const { return kind_; }
  std::string name() const;

  bool is_simply_laced() const;
  /// Order of s_i s_j: 1 if i == j, then 2, 3, 4 for a_ij a_ji = 0, 1, 2.
  int braid_order(std::size_t i, std::size_t j) const;

  Weight fundamental_weight(std::size_t i) const;
  Weight simple_root(std::size_t i) const;
  Coweight simple_coroot(std::size_t i) const;
  Weight zero_weight() const { return Weight(rank()); }
  Coweight zero_coweight() const { return Coweight(rank()); }

  Int pair(const Coweight& mu, const Weight& lam) const;
  /// <mu, alpha_i>.
  Int pair_root(const Coweight& mu, std::size_t i) const;
  Weight reflect_weight(std::size_t i, const Weight& lam) const;
  Coweight reflect_coweight(std::size_t i, const Coweight& mu) const;

  /// Positive roots in the simple-root basis.
  const std::vector<std::vector<Int>>& positive_roots() const { return positive_roots_; }
  /// Positive coroots in the simple-coroot basis.
  const std::vector<Coweight>& positive_coroots() const { return positive_coroots_; }
  std::size_t num_roots() const { return 2 * positive_roots_.size(); }
  /// Sum of the positive coroots; lies in the coroot lattice and is regular dominant.
  Coweight two_rho_vee() const;

  bool is_dominant(const Coweight& mu) const;
  /// mu >= 0 in the coroot order (all coroot coordinates non-negative).
  static bool is_nonnegative(const Coweight& mu);

  Weight weight_from_classical(const std::vector<Int>& x) const;
  /// A: the representative with minimum entry 0. C: the unique vector.
  std::vector<Int> weight_to_classical(const Weight& lam) const;
  Coweight coweight_from_classical(const std::vector<Int>& x) const;
  std::vector<Int> coweight_to_classical(const Coweight& mu) const;
  /// Classical dimension n (A_{n-1}: n = rank + 1, C_n: n = rank).
  std::size_t classical_dimension() const;

 private:
  void require_classical() const;

  CartanMatrix cartan_;
  ClassicalKind kind_;
  std::vector<std::vector<Int>> positive_roots_;
  std::vector<Coweight> positive_coroots_;
};

}  // namespace mv

#endif  // MVCRYSTAL_ROOT_DATUM_HPP
