#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nba/algebra_core.hpp"
#include "nba/term.hpp"

namespace nba {

/// A function n^k → n as a flat list of n^k values, first argument slowest.
struct TruthTable {
  int n = 2;
  int k = 0;
  std::vector<Value> entries;

  /// Throws ShapeError unless entries has n^k values in 1..n.
  void validate() const;
  bool operator==(const TruthTable&) const = default;
};

/// Shannon expansion on x1 first: q(x1, synth(f|x1=e1), ..., synth(f|x1=en)); arity 0
/// yields a constant. Variables are named x1..xk.
Term synth(const TruthTable& table);

struct RewriteStep {
  std::string rule;      // "B0-const-scrutinee", "B1-equal-branches", "B4-identity-branches"
  std::vector<int> position;  // argument indices from the root
};

using RewriteTrace = std::vector<RewriteStep>;

std::string position_string(const std::vector<int>& position);

/// Innermost-first, leftmost-first rewriting with
///   B0  q(e_i, y_1..y_n) → y_i
///   B1  q(x, y, ..., y)  → y
///   B4  q(x, e_1..e_n)   → x
/// tried in that order at each node. Requires a q-signature term.
std::pair<Term, RewriteTrace> simplify(const Term& t, Dim n);

/// True iff t agrees with the table on all n^k inputs under x1..xk.
bool verify_term(const Term& t, const TruthTable& table);

/// Table of a term over the named variables, first variable slowest.
TruthTable table_of(const Term& t, Dim n, const std::vector<std::string>& vars);

struct PrimalityProbe {
  enum class Result { found, inconclusive };
  Result result = Result::inconclusive;
  std::string witness;  // q-like term and constant order, when found
  std::string note;
};

/// Best-effort search for the generator |A| as a subreduct of a table algebra of at
/// most 4 elements: a term q(u_0, ..., u_n) with each u a variable x0..x|A| or a
/// constant, and an ordering c_1..c_|A| of the carrier, with q'(c_k, x) = x_k.
/// Never reports a negative answer.
PrimalityProbe probe_primality(const TableAlgebra& alg);

}  // namespace nba
