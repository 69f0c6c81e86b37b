#include "nba/synthesis.hpp"

#include <algorithm>
#include <numeric>

namespace nba {

void TruthTable::validate() const {
  (void)Dim(n);
  if (k < 0) throw ShapeError("arity must be non-negative");
  const auto want = saturating_pow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
  if (entries.size() != want)
    throw ShapeError("truth table needs " + std::to_string(want) + " entries, got " + std::to_string(entries.size()));
  for (Value v : entries)
    if (v < 1 || v > n) throw ShapeError("truth table entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

namespace {

Term synth_block(const std::vector<Value>& entries, std::size_t begin, std::size_t len, int n, int var) {
  if (len == 1) return Term::constant(entries[begin]);
  const std::size_t step = len / static_cast<std::size_t>(n);
  std::vector<Term> branches;
  for (int v = 0; v < n; ++v)
    branches.push_back(synth_block(entries, begin + static_cast<std::size_t>(v) * step, step, n, var + 1));
  return Term::q(Term::var("x" + std::to_string(var)), std::move(branches));
}

bool is_const(const Term& t, int k) { return t.kind == Term::Kind::constant && t.index == k; }

Term simplify_at(const Term& t, int n, std::vector<int>& path, RewriteTrace& trace) {
  switch (t.kind) {
    case Term::Kind::var:
    case Term::Kind::constant:
      return t;
    case Term::Kind::t:
    case Term::Kind::bin:
      throw PreconditionError("simplify needs a q-signature term");
    case Term::Kind::q:
      break;
  }
  Term r = t;
  for (std::size_t a = 0; a < r.args.size(); ++a) {
    path.push_back(static_cast<int>(a));
    r.args[a] = simplify_at(r.args[a], n, path, trace);
    path.pop_back();
  }
  const Term& x = r.args[0];
  if (x.kind == Term::Kind::constant) {
    trace.push_back({"B0-const-scrutinee", path});
    return r.args[static_cast<std::size_t>(x.index)];
  }
  bool equal = true;
  for (std::size_t a = 2; a < r.args.size() && equal; ++a) equal = r.args[a] == r.args[1];
  if (equal) {
    trace.push_back({"B1-equal-branches", path});
    return r.args[1];
  }
  bool identity = true;
  for (int k = 1; k <= n && identity; ++k) identity = is_const(r.args[static_cast<std::size_t>(k)], k);
  if (identity) {
    trace.push_back({"B4-identity-branches", path});
    return r.args[0];
  }
  return r;
}

std::vector<std::string> table_vars(int k) {
  std::vector<std::string> vars;
  for (int v = 1; v <= k; ++v) vars.push_back("x" + std::to_string(v));
  return vars;
}

}  // namespace

Term synth(const TruthTable& table) {
  table.validate();
  return synth_block(table.entries, 0, table.entries.size(), table.n, 1);
}

std::string position_string(const std::vector<int>& position) {
  std::string out;
  for (std::size_t i = 0; i < position.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(position[i]);
  }
  return out.empty() ? "root" : out;
}

std::pair<Term, RewriteTrace> simplify(const Term& t, Dim n) {
  validate_term(t, n);
  RewriteTrace trace;
  std::vector<int> path;
  Term r = simplify_at(t, n.value(), path, trace);
  return {std::move(r), std::move(trace)};
}

TruthTable table_of(const Term& t, Dim n, const std::vector<std::string>& vars) {
  TruthTable tt;
  tt.n = n.value();
  tt.k = static_cast<int>(vars.size());
  tt.entries = truth_values(t, n, vars);
  return tt;
}

bool verify_term(const Term& t, const TruthTable& table) {
  table.validate();
  const auto vars = table_vars(table.k);
  for (const auto& v : free_variables(t))
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
  return truth_values(t, Dim(table.n), vars) == table.entries;
}

PrimalityProbe probe_primality(const TableAlgebra& alg) {
  PrimalityProbe out;
  const std::size_t s = alg.size();
  const std::size_t n = static_cast<std::size_t>(alg.dim().value());
  if (s > 4) {
    out.note = "carrier above 4 elements; search skipped";
    return out;
  }
  if (s < 2) {
    out.note = "carrier below 2 elements";
    return out;
  }
  const auto generated = subalgebra_closure(alg, alg.constants());
  if (generated.size() != s) {
    out.note = "constants do not generate the carrier; not every element is a nullary term";
    return out;
  }
  // Atoms of u: 0..s are the variables x0..xs, s+1..s+n the constants e1..en.
  const std::size_t atoms = s + 1 + n;
  std::vector<std::size_t> u(n + 1, 0);
  std::vector<Index> order(s);
  std::vector<Index> env(s + 1);
  std::vector<Index> args(n + 1);
  auto value_of = [&](std::size_t atom) { return atom <= s ? env[atom] : alg.constant(static_cast<int>(atom - s)); };
  const std::uint64_t total = saturating_pow(atoms, n + 1);
  const std::uint64_t rows = saturating_pow(s, s);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t r = c;
    for (std::size_t p = n + 1; p-- > 0;) {
      u[p] = static_cast<std::size_t>(r % atoms);
      r /= atoms;
    }
    std::iota(order.begin(), order.end(), Index{0});
    do {
      bool ok = true;
      for (std::size_t k = 0; k < s && ok; ++k)
        for (std::uint64_t row = 0; row < rows && ok; ++row) {
          env[0] = order[k];
          std::uint64_t rr = row;
          for (std::size_t p = s; p >= 1; --p) {
            env[p] = static_cast<Index>(rr % s);
            rr /= s;
          }
          for (std::size_t p = 0; p <= n; ++p) args[p] = value_of(u[p]);
          ok = alg.q_args(args) == env[k + 1];
        }
      if (ok) {
        out.result = PrimalityProbe::Result::found;
        std::string term = "q(";
        for (std::size_t p = 0; p <= n; ++p) {
          if (p) term += ",";
          term += u[p] <= s ? "x" + std::to_string(u[p]) : "e" + std::to_string(u[p] - s);
        }
        term += ")";
        std::string consts;
        for (std::size_t k = 0; k < s; ++k) {
          if (k) consts += ",";
          consts += std::to_string(order[k]);
        }
        out.witness = term + " with c = [" + consts + "]";
        return out;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  out.note = "no depth-1 witness found";
  return out;
}

}  // namespace nba
