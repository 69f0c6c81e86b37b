#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nba/algebra_core.hpp"
#include "nba/skew_structure.hpp"

namespace nba {

/// Partial function X → {1, 2} on X = {0..points-1}; 0 marks an undefined point.
struct PartialFn {
  std::vector<Value> values;

  std::size_t points() const { return values.size(); }
  bool defined(std::size_t p) const { return values[p] != 0; }
  bool operator==(const PartialFn&) const = default;
  auto operator<=>(const PartialFn&) const = default;
};

std::string to_string(const PartialFn& f);

/// Every partial function on `points` points, as a right-handed skew BA and as an SRCA.
/// Element index = base-3 code with point 0 most significant (0 is the empty function).
///   f ∧ g = g|_{F∩G}     f ∨ g = f ∪ g|_{G∖F}     g \ f = g|_{G∖F}
///   q(f, g, h) = g|_{G∩F} ∪ h|_{H∖F}
struct PartialFnAlgebra {
  std::size_t points = 0;
  std::vector<PartialFn> elements;
  SkewAlgebra skew;
  ChurchAlgebra srca;

  Index index_of(const PartialFn& f) const;
};

/// Throws PreconditionError above 5 points.
PartialFnAlgebra partial_fn_algebra(std::size_t points);

/// f* with P_1 = f⁻¹(1), P_2 = f⁻¹(2), P_i = X ∖ dom f. Requires n ≥ 3 and i ∉ {1, 2}.
Element star_embed(const PartialFn& f, Dim n, int i);

struct EmbeddingReport {
  std::size_t pairs_checked = 0;
  bool injective = false;
  bool preserves_meet = false;
  bool preserves_join = false;
  bool preserves_minus = false;
  std::optional<std::string> first_failure;

  bool ok() const { return injective && preserves_meet && preserves_join && preserves_minus; }
};

/// Checks (f∧g)* = f* ∧_i g*, (f∨g)* = f* ∨̄_i g*, (g\f)* = g* \_i f* on all pairs.
EmbeddingReport verify_embedding(std::size_t points, Dim n, int i);

}  // namespace nba
