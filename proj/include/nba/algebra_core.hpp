#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nba/errors.hpp"

namespace nba {

/// Value index 1..n naming one of the constants e_1..e_n of the generator.
using Value = std::uint8_t;
/// Position of an element in a carrier listed in lexicographic order.
using Index = std::uint32_t;

/// Number of constants of an nBA. Always at least 2.
class Dim {
 public:
  explicit Dim(int n) : n_(n) {
    if (n < 2) throw DimensionError("dimension must be at least 2, got " + std::to_string(n));
    if (n > 32) throw DimensionError("dimension above 32 is not supported");
  }
  int value() const { return n_; }
  operator int() const { return n_; }
  bool operator==(const Dim&) const = default;

 private:
  int n_;
};

/// A nonempty subset d of {1..n}, stored as a bitmask (bit k-1 for index k).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> ks);
  static IndexSet from_mask(std::uint32_t mask) {
    IndexSet d;
    d.mask_ = mask;
    return d;
  }
  static IndexSet singleton(int k) { return IndexSet{k}; }
  static IndexSet full(int n) { return from_mask(n >= 32 ? ~0u : (1u << n) - 1u); }

  bool contains(int k) const { return k >= 1 && k <= 32 && ((mask_ >> (k - 1)) & 1u); }
  bool empty() const { return mask_ == 0; }
  std::uint32_t mask() const { return mask_; }
  int min() const;
  std::vector<int> members() const;
  IndexSet complement(int n) const { return from_mask(full(n).mask_ & ~mask_); }
  void insert(int k) { mask_ |= 1u << (k - 1); }
  /// Throws SubscriptError unless d is nonempty and within 1..n.
  void check(int n) const;

  bool operator==(const IndexSet&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Total assignment of value indices to the points 0..m-1; read as an n-partition
/// (Y_1..Y_n) with Y_k = {p : values[p] = k}.
struct Element {
  std::vector<Value> values;

  Element() = default;
  explicit Element(std::vector<Value> v) : values(std::move(v)) {}
  Element(std::initializer_list<int> v);

  std::size_t points() const { return values.size(); }
  Value operator[](std::size_t p) const { return values[p]; }
  auto operator<=>(const Element&) const = default;
  bool operator==(const Element&) const = default;
};

std::string to_string(const Element& e);

Element constant_element(Dim n, std::size_t points, int k);

class TableAlgebra;

/// A sub-power of the generator n: either all of n^m or an explicit carrier closed
/// under pointwise q that contains the constants.
class PowerAlgebra {
 public:
  using value_type = Element;

  PowerAlgebra(Dim n, std::size_t points);
  /// Throws ShapeError if the carrier is not a subalgebra of n^points.
  PowerAlgebra(Dim n, std::size_t points, std::vector<Element> carrier);

  Dim dim() const { return n_; }
  std::size_t points() const { return points_; }
  bool is_full() const { return !carrier_.has_value(); }
  std::size_t size() const;

  /// Carrier in lexicographic order.
  std::vector<Element> elements() const;
  Element element(Index i) const;
  std::optional<Index> index_of(const Element& e) const;
  bool contains(const Element& e) const { return index_of(e).has_value(); }

  Element constant(int k) const { return constant_element(n_, points_, k); }
  Element q(const Element& x, std::span<const Element> ys) const;

  /// Operation table over carrier indices; labels are the carrier elements.
  TableAlgebra tabulate() const;

 private:
  void check_shape(const Element& e) const;
  std::uint64_t code(const Element& e) const;

  Dim n_;
  std::size_t points_;
  std::optional<std::vector<Element>> carrier_;
};

/// Raw finite algebra of signature (q, e_1..e_n) given by its q table. It need not
/// satisfy B0-B4; this is what the audits take.
class TableAlgebra {
 public:
  using value_type = Index;

  /// `q_table` is row-major over (n+1)-tuples of element indices, scrutinee slowest.
  /// `constants` are 0-based element indices of e_1..e_n.
  TableAlgebra(Dim n, std::size_t size, std::vector<Index> constants, std::vector<Index> q_table,
               std::vector<Element> labels = {});

  Dim dim() const { return n_; }
  std::size_t size() const { return size_; }
  Index constant(int k) const { return constants_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<Index>& constants() const { return constants_; }
  const std::vector<Index>& q_table() const { return q_; }
  std::vector<Index>& mutable_q_table() { return q_; }

  Index q(Index x, std::span<const Index> ys) const;
  Index q_args(std::span<const Index> args) const { return q_[offset(args)]; }
  std::size_t offset(std::span<const Index> args) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<Element>& labels() const { return labels_; }
  const Element& label(Index i) const { return labels_.at(i); }
  std::optional<Index> index_of(const Element& e) const;

 private:
  Dim n_;
  std::size_t size_;
  std::vector<Index> constants_;
  std::vector<Index> q_;
  std::vector<Element> labels_;
};

/// Anything with constants e_1..e_n and an (n+1)-ary q over `value_type`.
template <class A>
concept QAlgebra = requires(const A& a, const typename A::value_type& x,
                            std::span<const typename A::value_type> ys, int k) {
  { a.dim() } -> std::convertible_to<Dim>;
  { a.q(x, ys) } -> std::convertible_to<typename A::value_type>;
  { a.constant(k) } -> std::convertible_to<typename A::value_type>;
};

/// Sequence of n arbitrary subsets of the point set, one membership mask per part.
struct NSubset {
  std::vector<std::vector<bool>> parts;

  std::size_t points() const { return parts.empty() ? 0 : parts.front().size(); }
  bool is_partition() const;
  /// Only valid when is_partition().
  Element to_element() const;
  static NSubset from_element(Dim n, const Element& e);
  bool operator==(const NSubset&) const = default;
};

PowerAlgebra generator(Dim n);
inline PowerAlgebra generator(int n) { return generator(Dim(n)); }
PowerAlgebra power_algebra(Dim n, std::size_t points);
inline PowerAlgebra power_algebra(int n, std::size_t points) { return power_algebra(Dim(n), points); }

Element q_eval(const PowerAlgebra& alg, const Element& x, std::span<const Element> ys);

NSubset nsubset_q(Dim n, const NSubset& y0, std::span<const NSubset> ys);

PowerAlgebra subalgebra_closure(const PowerAlgebra& alg, std::span<const Element> gens);

/// Index-level closure inside a table algebra; returns a sorted index list.
std::vector<Index> subalgebra_closure(const TableAlgebra& alg, std::span<const Index> gens);

/// size^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

}  // namespace nba
