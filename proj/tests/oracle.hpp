#pragma once

// Brute-force reference computations. These read the raw q table only and never
// call the library's congruence, multideal or homomorphism code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "nba/algebra_core.hpp"

namespace oracle {

using nba::Index;
using nba::TableAlgebra;

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Calls f on every (n+1)-tuple of carrier indices, scrutinee slowest.
template <class F>
bool all_tuples(const TableAlgebra& alg, F&& f) {
  const std::size_t s = alg.size();
  const std::size_t w = static_cast<std::size_t>(alg.dim().value()) + 1;
  std::vector<Index> t(w, 0);
  for (std::uint64_t c = 0, total = ipow(s, w); c < total; ++c) {
    std::uint64_t r = c;
    for (std::size_t p = w; p-- > 0;) {
      t[p] = static_cast<Index>(r % s);
      r /= s;
    }
    if (!f(t)) return false;
  }
  return true;
}

inline Index qt(const TableAlgebra& alg, const std::vector<Index>& args) { return alg.q_args(args); }

/// Restricted growth strings of length s.
inline std::vector<std::vector<Index>> set_partitions(std::size_t s) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> a(s, 0);
  std::function<void(std::size_t, Index)> rec = [&](std::size_t pos, Index top) {
    if (pos == s) {
      out.push_back(a);
      return;
    }
    for (Index b = 0; b <= top + 1; ++b) {
      a[pos] = b;
      rec(pos + 1, std::max(top, b));
    }
  };
  if (s == 0) return {{}};
  rec(1, 0);
  return out;
}

/// Label vectors of all congruences, by testing every partition against every tuple
/// and every single-position substitution within a block.
inline std::set<std::vector<Index>> congruences(const TableAlgebra& alg) {
  std::set<std::vector<Index>> out;
  const std::size_t s = alg.size();
  for (const auto& lab : set_partitions(s)) {
    std::vector<std::vector<Index>> block_members(s);
    for (Index x = 0; x < s; ++x) block_members[lab[x]].push_back(x);
    const bool ok = all_tuples(alg, [&](const std::vector<Index>& t) {
      const Index base = qt(alg, t);
      std::vector<Index> u = t;
      for (std::size_t p = 0; p < t.size(); ++p) {
        for (Index b : block_members[lab[t[p]]]) {
          u[p] = b;
          if (lab[qt(alg, u)] != lab[base]) return false;
        }
        u[p] = t[p];
      }
      return true;
    });
    if (ok) out.insert(lab);
  }
  return out;
}

/// Checks m1-m3 literally. `comp[x]` is k (1..n) for x ∈ I_k and 0 otherwise.
inline bool is_multideal(const TableAlgebra& alg, const std::vector<int>& comp) {
  const int n = alg.dim().value();
  for (int k = 1; k <= n; ++k)
    if (comp[alg.constant(k)] != k) return false;
  return all_tuples(alg, [&](const std::vector<Index>& t) {
    const int c = comp[qt(alg, t)];
    // m2: a ∈ I_r and b ∈ I_k at position r.
    const int r = comp[t[0]];
    if (r != 0) {
      const int k = comp[t[static_cast<std::size_t>(r)]];
      if (k != 0 && c != k) return false;
    }
    // m3: all branches in one I_k.
    const int k0 = comp[t[1]];
    if (k0 != 0) {
      bool same = true;
      for (std::size_t p = 2; p < t.size() && same; ++p) same = comp[t[p]] == k0;
      if (same && c != k0) return false;
    }
    return true;
  });
}

/// Proper multideals as component vectors (sorted, one per k).
inline std::set<std::vector<std::vector<Index>>> multideals(const TableAlgebra& alg) {
  const int n = alg.dim().value();
  const std::size_t s = alg.size();
  std::vector<Index> free;
  std::vector<int> comp(s, 0);
  for (Index x = 0; x < s; ++x) {
    const auto& cs = alg.constants();
    auto it = std::find(cs.begin(), cs.end(), x);
    if (it == cs.end())
      free.push_back(x);
    else
      comp[x] = static_cast<int>(it - cs.begin()) + 1;
  }
  std::set<std::vector<std::vector<Index>>> out;
  for (std::uint64_t c = 0, total = ipow(static_cast<std::uint64_t>(n) + 1, free.size()); c < total; ++c) {
    std::uint64_t r = c;
    for (Index x : free) {
      comp[x] = static_cast<int>(r % static_cast<std::uint64_t>(n + 1));
      r /= static_cast<std::uint64_t>(n + 1);
    }
    if (!is_multideal(alg, comp)) continue;
    std::vector<std::vector<Index>> m(static_cast<std::size_t>(n));
    for (Index x = 0; x < s; ++x)
      if (comp[x]) m[static_cast<std::size_t>(comp[x] - 1)].push_back(x);
    out.insert(m);
  }
  return out;
}

/// Homomorphisms onto the generator, by backtracking over elements in index order.
/// A tuple is checked as soon as its arguments and its value are all assigned.
inline std::set<std::vector<nba::Value>> homomorphisms(const TableAlgebra& alg) {
  const int n = alg.dim().value();
  const std::size_t s = alg.size();
  const std::size_t w = static_cast<std::size_t>(n) + 1;
  std::vector<int> h(s, 0);
  for (int k = 1; k <= n; ++k) h[alg.constant(k)] = k;
  std::set<std::vector<nba::Value>> out;
  std::vector<Index> order;
  for (Index x = 0; x < s; ++x)
    if (h[x] == 0) order.push_back(x);

  std::vector<Index> t(w);
  auto consistent = [&]() {
    return all_tuples(alg, [&](const std::vector<Index>& tt) {
      const int hx = h[tt[0]];
      if (hx == 0) return true;
      const int hb = h[tt[static_cast<std::size_t>(hx)]];
      const int hr = h[qt(alg, tt)];
      return hb == 0 || hr == 0 || hb == hr;
    });
  };
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      std::vector<nba::Value> v(s);
      for (Index x = 0; x < s; ++x) v[x] = static_cast<nba::Value>(h[x]);
      out.insert(v);
      return;
    }
    for (int k = 1; k <= n; ++k) {
      h[order[pos]] = k;
      if (consistent()) rec(pos + 1);
    }
    h[order[pos]] = 0;
  };
  if (consistent()) rec(0);
  return out;
}

/// Every subalgebra of a power algebra, by closing every subset of its carrier.
inline std::set<std::vector<nba::Element>> subalgebras(const nba::PowerAlgebra& alg) {
  const auto elems = alg.elements();
  std::set<std::vector<nba::Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elems.size()); ++mask) {
    std::vector<nba::Element> gens;
    for (std::size_t b = 0; b < elems.size(); ++b)
      if ((mask >> b) & 1u) gens.push_back(elems[b]);
    out.insert(nba::subalgebra_closure(alg, gens).elements());
  }
  return out;
}

}  // namespace oracle
