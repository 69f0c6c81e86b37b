#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "nba/algebra_core.hpp"
#include "nba/term.hpp"

namespace support {

using nba::Element;
using nba::Index;
using nba::TableAlgebra;

inline TableAlgebra par(int n, std::size_t points) { return nba::power_algebra(n, points).tabulate(); }

inline Index idx(const TableAlgebra& alg, const Element& e) { return alg.index_of(e).value(); }

struct Law {
  std::string name;
  std::string lhs;
  std::string rhs;
};

inline std::string qs(const std::string& x, const std::vector<std::string>& ys) {
  std::string s = "q(" + x;
  for (const auto& y : ys) s += "," + y;
  return s + ")";
}

/// B0 (one per i), B1, B2, B3, B4 as term text at dimension n.
inline std::vector<Law> nba_laws(int n) {
  std::vector<Law> out;
  std::vector<std::string> xs;
  for (int k = 1; k <= n; ++k) xs.push_back("x" + std::to_string(k));
  for (int i = 1; i <= n; ++i) out.push_back({"B0[" + std::to_string(i) + "]", qs("e" + std::to_string(i), xs), xs[static_cast<std::size_t>(i - 1)]});
  out.push_back({"B1", qs("y", std::vector<std::string>(static_cast<std::size_t>(n), "x")), "x"});
  {
    std::vector<std::string> inner, diag;
    for (int r = 1; r <= n; ++r) {
      std::vector<std::string> row;
      for (int c = 1; c <= n; ++c) row.push_back("x" + std::to_string(r) + "_" + std::to_string(c));
      inner.push_back(qs("y", row));
      diag.push_back(row[static_cast<std::size_t>(r - 1)]);
    }
    out.push_back({"B2", qs("y", inner), qs("y", diag)});
  }
  {
    auto v = [](int r, int c) { return "x" + std::to_string(r) + "_" + std::to_string(c); };
    std::vector<std::string> lhs_branches, rhs_branches;
    for (int r = 1; r <= n; ++r) {
      std::vector<std::string> row;
      for (int c = 1; c <= n; ++c) row.push_back(v(r, c));
      lhs_branches.push_back(qs(v(r, 0), row));
    }
    std::vector<std::string> col0;
    for (int r = 1; r <= n; ++r) col0.push_back(v(r, 0));
    for (int c = 1; c <= n; ++c) {
      std::vector<std::string> col;
      for (int r = 1; r <= n; ++r) col.push_back(v(r, c));
      rhs_branches.push_back(qs("y", col));
    }
    out.push_back({"B3", qs("y", lhs_branches), qs(qs("y", col0), rhs_branches)});
  }
  {
    std::vector<std::string> es;
    for (int k = 1; k <= n; ++k) es.push_back("e" + std::to_string(k));
    out.push_back({"B4", qs("y", es), "y"});
  }
  return out;
}

/// Random term over the q signature plus t and binary nodes, for the given variables.
class TermGen {
 public:
  TermGen(int n, std::vector<std::string> vars, std::uint64_t seed, bool q_only = false)
      : n_(n), vars_(std::move(vars)), rng_(seed), q_only_(q_only) {}

  nba::Term operator()(int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (depth <= 0 || pick(rng_) < 3) return leaf();
    const int kind = q_only_ ? 0 : pick(rng_) % 3;
    if (kind == 0) {
      nba::Term x = (*this)(depth - 1);
      std::vector<nba::Term> ys;
      for (int k = 0; k < n_; ++k) ys.push_back((*this)(depth - 1));
      return nba::Term::q(std::move(x), std::move(ys));
    }
    nba::IndexSet d = subset();
    if (kind == 1) {
      nba::Term x = (*this)(depth - 1);
      nba::Term y = (*this)(depth - 1);
      return nba::Term::t(d, std::move(x), std::move(y), (*this)(depth - 1));
    }
    std::uniform_int_distribution<int> op(0, 4);
    auto k = static_cast<nba::BinKind>(op(rng_));
    if (k == nba::BinKind::join && d == nba::IndexSet::full(n_)) k = nba::BinKind::meet;
    nba::Term l = (*this)(depth - 1);
    return nba::Term::bin(k, d, std::move(l), (*this)(depth - 1));
  }

 private:
  nba::Term leaf() {
    std::uniform_int_distribution<std::size_t> pick(0, vars_.size() + static_cast<std::size_t>(n_) - 1);
    const std::size_t c = pick(rng_);
    if (c < vars_.size()) return nba::Term::var(vars_[c]);
    return nba::Term::constant(static_cast<int>(c - vars_.size()) + 1);
  }
  nba::IndexSet subset() {
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << n_) - 1);
    return nba::IndexSet::from_mask(pick(rng_));
  }
  int n_;
  std::vector<std::string> vars_;
  std::mt19937_64 rng_;
  bool q_only_;
};

}  // namespace support
