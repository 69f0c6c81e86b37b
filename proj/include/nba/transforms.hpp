#pragma once

// Derived operations of an nBA: the ternary t_d, the five binary operations built
// from it, the action of permutations, coordinates, +_i and coordinate
// reconstruction. Everything is a template over QAlgebra so the same code runs on
// point-vector elements (PowerAlgebra) and on carrier indices (TableAlgebra).

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "nba/algebra_core.hpp"

namespace nba {

template <QAlgebra A>
using ValueOf = typename A::value_type;

enum class BinKind { meet, join, minus, barwedge, barvee };

const char* bin_kind_name(BinKind k);  // "and", "or", "sub", "bw", "bv"

/// Designated constants of the binary operations: 0_i with i ∈ d and 1_j with j ∉ d.
/// Unset fields default to the smallest admissible index.
struct BinDesignation {
  std::optional<int> zero;
  std::optional<int> one;
};

int designated_zero(IndexSet d, int n, const BinDesignation& des = {});
int designated_one(IndexSet d, int n, const BinDesignation& des = {});

/// The pair (i, j), i ≠ j, fixing the Boolean center B_ij.
struct CenterParams {
  int i = 1;
  int j = 2;
  void check(int n) const;
  bool operator==(const CenterParams&) const = default;
};

class Permutation {
 public:
  /// `images[k-1]` is σ(k). Throws PreconditionError unless bijective on 1..n.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int r, int k);
  /// All n! permutations in lexicographic order of their image sequences.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<int>& images() const { return images_; }
  /// (*this ∘ other)(k) = (*this)(other(k)).
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// t_d(x, y, z) = q(x, y/d̄, z/d).
template <QAlgebra A>
ValueOf<A> t_eval(const A& alg, IndexSet d, const ValueOf<A>& x, const ValueOf<A>& y,
                  const ValueOf<A>& z) {
  const int n = alg.dim().value();
  d.check(n);
  std::vector<ValueOf<A>> branches;
  branches.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) branches.push_back(d.contains(k) ? z : y);
  return alg.q(x, branches);
}

/// `lhs op_d rhs` for the five derived binary operations:
///   x ∧_d y = t_d(x, y, 0_i)     x ∨_d y = t_d(x, 1_j, y)     x \_d y = t_d(y, 0_i, x)
///   x ∧̄_d y = t_d(x, y, x)       x ∨̄_d y = t_d(x, x, y)
template <QAlgebra A>
ValueOf<A> derived_bin(const A& alg, BinKind kind, IndexSet d, const ValueOf<A>& lhs,
                       const ValueOf<A>& rhs, const BinDesignation& des = {}) {
  const int n = alg.dim().value();
  d.check(n);
  switch (kind) {
    case BinKind::meet:
      return t_eval(alg, d, lhs, rhs, alg.constant(designated_zero(d, n, des)));
    case BinKind::join:
      return t_eval(alg, d, lhs, alg.constant(designated_one(d, n, des)), rhs);
    case BinKind::minus:
      return t_eval(alg, d, rhs, alg.constant(designated_zero(d, n, des)), lhs);
    case BinKind::barwedge:
      return t_eval(alg, d, lhs, rhs, lhs);
    case BinKind::barvee:
      return t_eval(alg, d, lhs, lhs, rhs);
  }
  throw PreconditionError("unknown binary operation");
}

template <QAlgebra A>
ValueOf<A> meet_i(const A& alg, int i, const ValueOf<A>& x, const ValueOf<A>& y) {
  return derived_bin(alg, BinKind::meet, IndexSet::singleton(i), x, y);
}
template <QAlgebra A>
ValueOf<A> join_i(const A& alg, int i, const ValueOf<A>& x, const ValueOf<A>& y) {
  return derived_bin(alg, BinKind::barvee, IndexSet::singleton(i), x, y);
}
template <QAlgebra A>
ValueOf<A> minus_i(const A& alg, int i, const ValueOf<A>& x, const ValueOf<A>& y) {
  return derived_bin(alg, BinKind::minus, IndexSet::singleton(i), x, y);
}

/// x^σ = q(x, e_{σ1}, ..., e_{σn}).
template <QAlgebra A>
ValueOf<A> perm_apply(const A& alg, const ValueOf<A>& x, const Permutation& sigma) {
  const int n = alg.dim().value();
  if (sigma.size() != n) throw PreconditionError("permutation size does not match dimension");
  std::vector<ValueOf<A>> branches;
  for (int k = 1; k <= n; ++k) branches.push_back(alg.constant(sigma(k)));
  ValueOf<A> r = alg.q(x, branches);
#ifndef NDEBUG
  if constexpr (std::is_same_v<ValueOf<A>, Element>) {
    for (std::size_t p = 0; p < x.points(); ++p) assert(r.values[p] == sigma(x.values[p]));
  }
#endif
  return r;
}

/// x_k = t_k(x, e_i, e_j) for k = 1..n.
template <QAlgebra A>
std::vector<ValueOf<A>> coordinates(const A& alg, const ValueOf<A>& x, CenterParams cp) {
  const int n = alg.dim().value();
  cp.check(n);
  std::vector<ValueOf<A>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    out.push_back(t_eval(alg, IndexSet::singleton(k), x, alg.constant(cp.i), alg.constant(cp.j)));
  return out;
}

/// ¬_ij x = t_i(x, e_i, e_j).
template <QAlgebra A>
ValueOf<A> boolean_negation(const A& alg, CenterParams cp, const ValueOf<A>& x) {
  return t_eval(alg, IndexSet::singleton(cp.i), x, alg.constant(cp.i), alg.constant(cp.j));
}

/// x +_i y = q(x, t_i(y,e_i,e_1), ..., y, ..., t_i(y,e_i,e_n)) with y at position i.
template <QAlgebra A>
ValueOf<A> plus_i(const A& alg, const ValueOf<A>& x, const ValueOf<A>& y, int i) {
  const int n = alg.dim().value();
  if (i < 1 || i > n) throw SubscriptError("index i out of range");
  std::vector<ValueOf<A>> branches;
  for (int k = 1; k <= n; ++k)
    branches.push_back(k == i ? y
                              : t_eval(alg, IndexSet::singleton(i), y, alg.constant(i),
                                       alg.constant(k)));
  return alg.q(x, branches);
}

/// How the +_i chain of reconstruct is summed: `order` permutes the n summands
/// (0-based), and `merges` lists n-1 positions; step s replaces items p, p+1 of the
/// current list by their sum. Empty fields mean identity order, right-nested sum.
struct SumShape {
  std::vector<std::size_t> order;
  std::vector<std::size_t> merges;

  /// Every (order, bracketing) pair for n summands; bracketings as merge sequences
  /// (a bracketing reachable by several sequences appears more than once).
  static std::vector<SumShape> all(std::size_t n);
};

/// (x_1 ∧_i e_1) +_i ... +_i (x_n ∧_i e_n).
template <QAlgebra A>
ValueOf<A> reconstruct(const A& alg, std::span<const ValueOf<A>> coords, int i,
                       const SumShape& shape = {}) {
  const int n = alg.dim().value();
  if (coords.size() != static_cast<std::size_t>(n)) throw ShapeError("expected n coordinates");
  if (i < 1 || i > n) throw SubscriptError("index i out of range");
  std::vector<ValueOf<A>> items;
  for (std::size_t s = 0; s < coords.size(); ++s) {
    const std::size_t k = shape.order.empty() ? s : shape.order.at(s);
    items.push_back(meet_i(alg, i, coords[k], alg.constant(static_cast<int>(k) + 1)));
  }
  for (std::size_t step = 0; items.size() > 1; ++step) {
    const std::size_t p = shape.merges.empty() ? items.size() - 2 : shape.merges.at(step);
    if (p + 1 >= items.size()) throw PreconditionError("merge position out of range");
    items[p] = plus_i(alg, items[p], items[p + 1], i);
    items.erase(items.begin() + static_cast<std::ptrdiff_t>(p) + 1);
  }
  return items.front();
}

}  // namespace nba
