#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nba/algebra_core.hpp"
#include "nba/congruence.hpp"
#include "nba/skew_structure.hpp"
#include "nba/transforms.hpp"

namespace nba {

/// Smallest congruence containing `pairs`: union-find closed under every unary
/// translation x ↦ q(c_0, ..., x at position p, ..., c_n).
Congruence congruence_generated(const TableAlgebra& alg, std::span<const std::pair<Index, Index>> pairs);

/// All congruences, Δ first and ∇ last; ordered by descending block count, then by
/// label vector. Throws BudgetExceeded above `bound` elements.
std::vector<Congruence> all_congruences(const TableAlgebra& alg, std::size_t bound = 64);

/// Either a proper multideal (I_1..I_n) or the degenerate I^⊤ = (A, ..., A).
class Multideal {
 public:
  static Multideal proper(std::vector<std::vector<Index>> components);
  static Multideal degenerate();

  bool is_degenerate() const { return degenerate_; }
  bool is_proper() const { return !degenerate_; }
  /// I_k for k = 1..n, ascending indices. Empty for the degenerate value.
  const std::vector<Index>& component(int k) const { return components_.at(static_cast<std::size_t>(k - 1)); }
  const std::vector<std::vector<Index>>& components() const { return components_; }
  bool contains(int k, Index x) const;
  /// k with x ∈ I_k, if any.
  std::optional<int> component_of(Index x) const;
  std::vector<Index> carrier() const;
  bool is_ultra(std::size_t algebra_size) const;

  bool operator==(const Multideal&) const = default;

 private:
  bool degenerate_ = false;
  std::vector<std::vector<Index>> components_;
};

struct MultidealVerdict {
  enum class Kind { proper, degenerate, invalid };
  Kind kind = Kind::proper;
  std::string clause;   // first violated clause: "shape", "disjoint", "m1", "m2", "m3"
  std::string witness;  // human-readable instance
};

MultidealVerdict validate_multideal(const TableAlgebra& alg, const std::vector<std::vector<Index>>& candidate);

/// I(θ) = (e_1/θ, ..., e_n/θ); ∇ gives the degenerate value.
Multideal multideal_of(const TableAlgebra& alg, const Congruence& theta);

/// θ_I: x θ y iff f_I(x_k) = f_I(y_k) for all k, with f_I the quotient of B_ij by
/// I_* = B_ij ∩ I_i.
Congruence theta_of(const TableAlgebra& alg, const Multideal& I, CenterParams cp = {});

/// Least multideal containing the seed (degenerate if the fixpoint collapses).
Multideal ideal_closure(const TableAlgebra& alg, const std::vector<std::vector<Index>>& seed);

/// Proper multideals in the order of all_congruences.
std::vector<Multideal> all_multideals(const TableAlgebra& alg, std::size_t bound = 64);

/// Atoms a of B_ij (algebra indices) with a ≰ ⋁I_*, i.e. ↑a extends I^* = B_ij ∩ I_j.
std::vector<Index> admissible_atoms(const TableAlgebra& alg, const Multideal& I, CenterParams cp = {});

/// G_k = {x : x_k ∈ ↑atom}. Throws PreconditionError for a non-admissible atom.
Multideal extend_to_ultra(const TableAlgebra& alg, const Multideal& I, CenterParams cp, Index atom);

/// One ultramultideal per atom of B_ij, in ascending order of their hom vectors.
std::vector<Multideal> all_ultramultideals(const TableAlgebra& alg, CenterParams cp = {});

/// h(x) = k for x ∈ G_k. Requires an ultramultideal.
std::vector<Value> ultra_to_hom(const TableAlgebra& alg, const Multideal& U);
/// G_k = h⁻¹(k). Throws PreconditionError unless h is a homomorphism onto the generator.
Multideal hom_to_ultra(const TableAlgebra& alg, const std::vector<Value>& h);
/// True iff h preserves q and the constants.
bool is_homomorphism_onto_generator(const TableAlgebra& alg, const std::vector<Value>& h);

/// x ∧_i y ∈ I_i implies x ∈ I_i or y ∈ I_i.
bool is_prime(const TableAlgebra& alg, const Multideal& I, CenterParams cp = {});

struct StoneEmbedding {
  std::size_t points = 0;              // number of ultramultideals
  std::vector<Element> image;          // per algebra element
  bool injective = false;
  bool preserves_q = false;
  bool surjective = false;             // onto the full power n^points
};

StoneEmbedding stone_embed(const TableAlgebra& alg, CenterParams cp = {});

struct IdealFilter {
  std::vector<Index> ideal;   // I_2, containing 0 = e_2
  std::vector<Index> filter;  // I_1, containing 1 = e_1
};

/// n = 2 only: (I_2, I_1) checked as a Boolean ideal and filter with I_1 = ¬I_2,
/// where 0 = e_2, 1 = e_1, x∧y = q(x,y,0), x∨y = q(x,1,y), ¬x = q(x,0,1).
/// Throws DimensionError for n ≠ 2 and PreconditionError if a check fails.
IdealFilter boolean_ideal_filter_view(const TableAlgebra& alg, const Multideal& I);

}  // namespace nba
