#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nba/algebra_core.hpp"
#include "nba/transforms.hpp"

namespace nba {

/// Abstract syntax over the q, skew and skew-star signatures.
///
///   var            x, y1, foo_2
///   constant       ek (or 0k, which names the same constant e_k)
///   q              q(x, y_1, ..., y_n)
///   t              t[d](x, y, z)
///   bin            and/or/sub/bw/bv[d](lhs, rhs)
struct Term {
  enum class Kind { var, constant, q, t, bin };

  Kind kind = Kind::var;
  std::string name;
  int index = 0;
  bool zero_spelling = false;
  IndexSet subscript;
  BinKind op = BinKind::meet;
  std::vector<Term> args;

  static Term var(std::string name);
  static Term constant(int k, bool zero_spelling = false);
  static Term q(Term scrutinee, std::vector<Term> branches);
  static Term t(IndexSet d, Term x, Term y, Term z);
  static Term bin(BinKind op, IndexSet d, Term lhs, Term rhs);

  std::size_t node_count() const;
};

bool operator==(const Term& a, const Term& b);

Term parse_term(const std::string& text, Dim n);
std::string print_term(const Term& t);

/// Throws ArityError/SubscriptError if `t` is not well formed at dimension n.
void validate_term(const Term& t, Dim n);

/// Variables in order of first occurrence (left to right, depth first).
std::vector<std::string> free_variables(const Term& t);
std::vector<std::string> free_variables(const Term& lhs, const Term& rhs);

/// Rewrites every t and bin node into q nodes by the defining equations, using the
/// default designated constants (smallest admissible i ∈ d, j ∉ d).
Term elaborate(const Term& t, Dim n);

template <QAlgebra A>
using Environment = std::map<std::string, ValueOf<A>>;

template <QAlgebra A>
ValueOf<A> eval_term(const Term& t, const Environment<A>& env, const A& alg) {
  switch (t.kind) {
    case Term::Kind::var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw UnboundVariable(t.name);
      return it->second;
    }
    case Term::Kind::constant:
      return alg.constant(t.index);
    case Term::Kind::q: {
      if (t.args.size() != static_cast<std::size_t>(alg.dim().value()) + 1)
        throw ArityError("q node has the wrong number of branches");
      const ValueOf<A> x = eval_term(t.args[0], env, alg);
      std::vector<ValueOf<A>> ys;
      ys.reserve(t.args.size() - 1);
      for (std::size_t k = 1; k < t.args.size(); ++k) ys.push_back(eval_term(t.args[k], env, alg));
      return alg.q(x, ys);
    }
    case Term::Kind::t:
      return t_eval(alg, t.subscript, eval_term(t.args[0], env, alg),
                    eval_term(t.args[1], env, alg), eval_term(t.args[2], env, alg));
    case Term::Kind::bin:
      return derived_bin(alg, t.op, t.subscript, eval_term(t.args[0], env, alg),
                         eval_term(t.args[1], env, alg));
  }
  throw PreconditionError("malformed term");
}

/// A term flattened into a postfix program over the q signature, evaluated on single
/// values of the generator n. This is the fast path of identity checking.
class CompiledTerm {
 public:
  /// `slots` fixes the variable order; every free variable of `t` must appear in it.
  CompiledTerm(const Term& t, Dim n, const std::vector<std::string>& slots);

  Value eval(const Value* assignment) const;

 private:
  enum class Op : std::uint8_t { var, constant, q };
  struct Instr {
    Op op;
    std::uint16_t arg;
  };
  int n_;
  std::vector<Instr> code_;
  std::size_t max_stack_ = 0;
};

enum class CheckMode { exhaustive, sampled };

struct CheckOptions {
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 0xA11CE;
  /// Largest n^(#vars) accepted in exhaustive mode.
  std::uint64_t budget = 10'000'000;
};

using Assignment = std::vector<std::pair<std::string, int>>;

struct Verdict {
  bool valid = true;
  std::optional<Assignment> counterexample;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t assignments_checked = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> variables;
};

/// Decides lhs = rhs over the variety of nBAs by evaluation in the generator n.
/// Exhaustive mode throws BudgetExceeded when n^(#vars) exceeds the budget.
Verdict check_identity(const Term& lhs, const Term& rhs, Dim n, const CheckOptions& opts = {});

/// Value sequence of `t` over all assignments of `vars`, first variable slowest.
std::vector<Value> truth_values(const Term& t, Dim n, const std::vector<std::string>& vars);

}  // namespace nba
