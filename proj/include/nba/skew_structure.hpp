#pragma once

// Reducts of an nBA (Church, right Church, skew, skew star), the relations of a
// skew lattice, identity audits over finite tables, element kinds and the Boolean
// center B_ij.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nba/algebra_core.hpp"
#include "nba/congruence.hpp"
#include "nba/term.hpp"
#include "nba/transforms.hpp"

namespace nba {

/// (A, ∧, ∨, \, 0) as binary tables over carrier indices, row-major.
/// `minus[a*size+b]` is a \ b.
struct SkewAlgebra {
  std::size_t size = 0;
  Index zero = 0;
  std::vector<Index> meet;
  std::vector<Index> join;
  std::vector<Index> minus;
  std::vector<Element> labels;

  Index m(Index a, Index b) const { return meet[a * size + b]; }
  Index j(Index a, Index b) const { return join[a * size + b]; }
  Index d(Index a, Index b) const { return minus[a * size + b]; }
};

/// (A, t, 0) or (A, t, 0, 1) with `t[(x*size+y)*size+z]`.
struct ChurchAlgebra {
  std::size_t size = 0;
  std::vector<Index> t;
  Index zero = 0;
  std::optional<Index> one;
  std::vector<Element> labels;

  Index at(Index x, Index y, Index z) const { return t[(x * size + y) * size + z]; }
};

/// (A, t_1..t_n, 0_1..0_n); `t[k-1]` is the table of t_k in ChurchAlgebra layout.
struct StarAlgebra {
  Dim n{2};
  std::size_t size = 0;
  std::vector<std::vector<Index>> t;
  std::vector<Index> zeros;
  std::vector<Element> labels;

  Index at(int k, Index x, Index y, Index z) const {
    return t[static_cast<std::size_t>(k - 1)][(x * size + y) * size + z];
  }
  bool operator==(const StarAlgebra& o) const {
    return n == o.n && size == o.size && t == o.t && zeros == o.zeros;
  }
};

struct ReductKind {
  enum class Tag { church, right_church, skew };
  Tag tag = Tag::skew;
  IndexSet d;
  int i = 1;
  int j = 2;

  static ReductKind church(IndexSet d, int i, int j) { return {Tag::church, d, i, j}; }
  static ReductKind right_church(int i) { return {Tag::right_church, IndexSet::singleton(i), i, 0}; }
  static ReductKind skew(int i) { return {Tag::skew, IndexSet::singleton(i), i, 0}; }
};

/// Church d-reduct (A, t_d, e_i, e_j); requires i ∈ d, j ∉ d.
ChurchAlgebra church_reduct(const TableAlgebra& alg, IndexSet d, int i, int j);
/// Right Church i-reduct (A, t_i, e_i).
ChurchAlgebra right_church_reduct(const TableAlgebra& alg, int i);
/// Skew i-reduct S_i(A) = (A, ∧_i, ∨̄_i, \_i, e_i).
SkewAlgebra skew_reduct(const TableAlgebra& alg, int i);

using Reduct = std::variant<ChurchAlgebra, SkewAlgebra>;
Reduct reduct(const TableAlgebra& alg, const ReductKind& kind);

/// A* = (A, t_1..t_n, e_1..e_n).
StarAlgebra to_star(const TableAlgebra& alg);
/// B• = (B, q_t, 0_1..0_n) with q_t(x,y_1..y_n) = t_1(x, t_2(x, ..., t_{n-1}(x,y_n,y_{n-1}) ..., y_2), y_1).
TableAlgebra from_star(const StarAlgebra& star);

// ---------------------------------------------------------------------------
// Audits

enum class Suite { nba, skew_lattice, skew_ba, right_handed, srca, skew_star, boolean };
const char* suite_name(Suite s);

struct AuditOptions {
  /// Largest size^(#vars) evaluated exhaustively per identity.
  std::uint64_t budget = 10'000'000;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0xA11CE;
};

/// One identity over `vars.size()` carrier variables.
struct Identity {
  std::string name;
  std::vector<std::string> vars;
  std::function<bool(std::span<const Index>)> holds;
};

struct AxiomOutcome {
  std::string name;
  bool ok = true;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t checked = 0;
  std::vector<std::pair<std::string, Index>> counterexample;
};

struct AxiomReport {
  Suite suite = Suite::nba;
  std::vector<AxiomOutcome> axioms;
  std::uint64_t seed = 0;

  bool ok() const;
  bool sampled() const;
  const AxiomOutcome* first_failure() const;
  const AxiomOutcome* find(const std::string& name) const;
};

AxiomOutcome audit_identity(const Identity& id, std::size_t carrier, const AuditOptions& opts = {});
AxiomReport audit(Suite suite, const std::vector<Identity>& ids, std::size_t carrier,
                  const AuditOptions& opts = {});

/// Suite must be nba.
AxiomReport check_axioms(const TableAlgebra& alg, Suite suite, const AuditOptions& opts = {});
/// Suite must be skew_lattice, skew_ba or right_handed.
AxiomReport check_axioms(const SkewAlgebra& alg, Suite suite, const AuditOptions& opts = {});
/// Suite must be srca.
AxiomReport check_axioms(const ChurchAlgebra& alg, Suite suite, const AuditOptions& opts = {});
/// Suite must be skew_star.
AxiomReport check_axioms(const StarAlgebra& alg, Suite suite, const AuditOptions& opts = {});

/// Identities of each suite, exposed so callers can audit subsets.
std::vector<Identity> nba_identities(const TableAlgebra& alg);
std::vector<Identity> skew_identities(const SkewAlgebra& alg, Suite suite);
std::vector<Identity> srca_identities(const ChurchAlgebra& alg);
std::vector<Identity> skew_star_identities(const StarAlgebra& alg);

// ---------------------------------------------------------------------------
// Relations of a skew lattice

struct RelationBundle {
  using Matrix = std::vector<std::vector<bool>>;
  std::size_t size = 0;
  Matrix le;     // x ≤ y   iff x∧y = x = y∧x
  Matrix pre;    // x ⪯ y   iff x∧y∧x = x
  Matrix pre_l;  // x ⪯_l y iff x∧y = x
  Matrix pre_r;  // x ⪯_r y iff y∧x = x
  Matrix D;
  Matrix L;
  Matrix R;
  bool right_handed = false;  // R = D
};

/// Throws PreconditionError unless the SKEW_LATTICE audit passes.
RelationBundle relations(const SkewAlgebra& sk);

/// Blocks of an equivalence matrix as a Congruence over the same carrier.
Congruence equivalence_of(const RelationBundle::Matrix& rel);

// ---------------------------------------------------------------------------
// Element kinds

enum class ElementKind { factor, semicentral, central };

/// FACTOR: q(e,-,...,-) satisfies D1-D3. SEMICENTRAL(i): f(a,b) = t_i(e,a,b) satisfies
/// D1-D3 in the right Church i-reduct and t_i(e,e,e_i) = e. CENTRAL: FACTOR and
/// q(e,e_1,...,e_n) = e. Identities beyond the budget are sampled.
AxiomReport element_kind_report(const TableAlgebra& alg, Index e, ElementKind kind, int i = 1,
                                const AuditOptions& opts = {});
bool is_element_kind(const TableAlgebra& alg, Index e, ElementKind kind, int i = 1,
                     const AuditOptions& opts = {});

// ---------------------------------------------------------------------------
// Boolean center

/// B_ij = {x : x ∧_i e_j = x} with ∧_i, ∨̄_i, ¬_ij, bottom e_i and top e_j.
/// Local operation tables are indexed by position in `carrier`.
struct BooleanCenter {
  CenterParams cp;
  std::vector<Index> carrier;
  std::vector<std::size_t> position;  // algebra index -> carrier position or npos
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::size_t> meet;
  std::vector<std::size_t> join;
  std::vector<std::size_t> neg;
  std::vector<std::size_t> atoms;      // carrier positions
  std::vector<std::uint64_t> masks;    // per position: bit a set iff atoms[a] ≤ x

  std::size_t size() const { return carrier.size(); }
  bool contains(Index x) const;
  std::size_t pos(Index x) const;
  std::uint64_t mask_of(Index x) const { return masks[pos(x)]; }
  bool leq(std::size_t a, std::size_t b) const { return meet[a * size() + b] == a; }
};

BooleanCenter boolean_center(const TableAlgebra& alg, CenterParams cp);
AxiomReport audit_boolean(const BooleanCenter& bc, const AuditOptions& opts = {});

/// c(x) = t_d(x, e_j, e_i).
template <QAlgebra A>
ValueOf<A> central_retract(const A& alg, IndexSet d, int i, int j, const ValueOf<A>& x) {
  const int n = alg.dim().value();
  d.check(n);
  if (!d.contains(i) || d.contains(j)) throw PreconditionError("central_retract needs i ∈ d and j ∉ d");
  return t_eval(alg, d, x, alg.constant(j), alg.constant(i));
}

/// (φ, φ̄) with φ = {(x,y) : t_i(e,x,y) = x} and φ̄ = {(x,y) : t_i(e,x,y) = y}.
std::pair<Congruence, Congruence> factor_congruences_of(const TableAlgebra& alg, Index e, int i);

}  // namespace nba
