#include "nba/skew_structure.hpp"

#include <memory>
#include <random>

namespace nba {

namespace {

std::string sub_name(const std::string& base, int a, int b, int n) {
  if (n < 10) return base + std::to_string(a) + std::to_string(b);
  return base + std::to_string(a) + "_" + std::to_string(b);
}

std::vector<std::string> names(std::initializer_list<const char*> ns) {
  return std::vector<std::string>(ns.begin(), ns.end());
}

/// Fixes the first variable of `id` to `e`.
Identity bind_first(const Identity& id, Index e) {
  Identity out;
  out.name = id.name;
  out.vars.assign(id.vars.begin() + 1, id.vars.end());
  out.holds = [h = id.holds, e](std::span<const Index> v) {
    std::vector<Index> full;
    full.reserve(v.size() + 1);
    full.push_back(e);
    full.insert(full.end(), v.begin(), v.end());
    return h(full);
  };
  return out;
}

Index q_with(const TableAlgebra& alg, Index x, std::span<const Index> ys) { return alg.q(x, ys); }

/// D1-D3 for f(xs) = q(e, xs) over the q signature; first variable is e.
std::vector<Identity> factor_identities(const TableAlgebra& alg) {
  const int n = alg.dim().value();
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Identity> ids;

  Identity d1{"D1", names({"e", "x"}), nullptr};
  d1.holds = [&alg, nn](std::span<const Index> v) {
    const std::vector<Index> ys(nn, v[1]);
    return q_with(alg, v[0], ys) == v[1];
  };
  ids.push_back(std::move(d1));

  Identity d2{"D2", {"e"}, nullptr};
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) d2.vars.push_back(sub_name("x", a, b, n));
  d2.holds = [&alg, nn](std::span<const Index> v) {
    const Index e = v[0];
    std::vector<Index> outer(nn), diag(nn);
    for (std::size_t a = 0; a < nn; ++a) {
      outer[a] = q_with(alg, e, v.subspan(1 + a * nn, nn));
      diag[a] = v[1 + a * nn + a];
    }
    return q_with(alg, e, outer) == q_with(alg, e, diag);
  };
  ids.push_back(std::move(d2));

  // f(q(x_{1,0..n}), ..., q(x_{n,0..n})) = q(f(x_{1,0}..x_{n,0}), ..., f(x_{1,n}..x_{n,n}))
  Identity d3{"D3", {"e"}, nullptr};
  for (int a = 1; a <= n; ++a)
    for (int b = 0; b <= n; ++b) d3.vars.push_back(sub_name("x", a, b, n));
  d3.holds = [&alg, nn](std::span<const Index> v) {
    const Index e = v[0];
    const std::size_t row = nn + 1;
    std::vector<Index> lhs_args(nn);
    for (std::size_t a = 0; a < nn; ++a)
      lhs_args[a] = alg.q_args(v.subspan(1 + a * row, row));
    std::vector<Index> rhs_args(row), column(nn);
    for (std::size_t b = 0; b < row; ++b) {
      for (std::size_t a = 0; a < nn; ++a) column[a] = v[1 + a * row + b];
      rhs_args[b] = q_with(alg, e, column);
    }
    return q_with(alg, e, lhs_args) == alg.q_args(rhs_args);
  };
  ids.push_back(std::move(d3));
  return ids;
}

/// D1-D3 for f(a,b) = t(e,a,b) plus t(e,e,0) = e; first variable is e.
std::vector<Identity> semicentral_identities(std::shared_ptr<const ChurchAlgebra> ch) {
  std::vector<Identity> ids;
  ids.push_back({"D1", names({"e", "x"}),
                 [ch](std::span<const Index> v) { return ch->at(v[0], v[1], v[1]) == v[1]; }});
  ids.push_back({"D2", names({"e", "x11", "x12", "x21", "x22"}), [ch](std::span<const Index> v) {
                   const Index e = v[0];
                   return ch->at(e, ch->at(e, v[1], v[2]), ch->at(e, v[3], v[4])) == ch->at(e, v[1], v[4]);
                 }});
  ids.push_back({"D3", names({"e", "x11", "x12", "x13", "x21", "x22", "x23"}),
                 [ch](std::span<const Index> v) {
                   const Index e = v[0];
                   const Index lhs = ch->at(e, ch->at(v[1], v[2], v[3]), ch->at(v[4], v[5], v[6]));
                   const Index rhs = ch->at(ch->at(e, v[1], v[4]), ch->at(e, v[2], v[5]), ch->at(e, v[3], v[6]));
                   return lhs == rhs;
                 }});
  ids.push_back({"semicentral", names({"e"}),
                 [ch](std::span<const Index> v) { return ch->at(v[0], v[0], ch->zero) == v[0]; }});
  return ids;
}

std::vector<Identity> srca_from(std::shared_ptr<const ChurchAlgebra> ch, const std::string& prefix) {
  std::vector<Identity> ids;
  ids.push_back({prefix + "RCA", names({"x", "y"}),
                 [ch](std::span<const Index> v) { return ch->at(ch->zero, v[0], v[1]) == v[1]; }});
  for (auto& id : semicentral_identities(ch)) {
    id.name = prefix + id.name;
    ids.push_back(std::move(id));
  }
  return ids;
}

Index qt_eval(const StarAlgebra& s, Index x, std::span<const Index> ys) {
  const int n = s.n.value();
  Index acc = ys[static_cast<std::size_t>(n - 1)];
  for (int k = n - 1; k >= 1; --k) acc = s.at(k, x, acc, ys[static_cast<std::size_t>(k - 1)]);
  return acc;
}

ChurchAlgebra church_table(const TableAlgebra& alg, IndexSet d, Index zero, std::optional<Index> one) {
  const std::size_t s = alg.size();
  ChurchAlgebra ch;
  ch.size = s;
  ch.zero = zero;
  ch.one = one;
  ch.labels = alg.labels();
  ch.t.resize(s * s * s);
  for (Index x = 0; x < s; ++x)
    for (Index y = 0; y < s; ++y)
      for (Index z = 0; z < s; ++z) ch.t[(x * s + y) * s + z] = t_eval(alg, d, x, y, z);
  return ch;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reducts

ChurchAlgebra church_reduct(const TableAlgebra& alg, IndexSet d, int i, int j) {
  const int n = alg.dim().value();
  d.check(n);
  if (!d.contains(i)) throw PreconditionError("church reduct needs i ∈ d");
  if (j < 1 || j > n || d.contains(j)) throw PreconditionError("church reduct needs j ∉ d");
  return church_table(alg, d, alg.constant(i), alg.constant(j));
}

ChurchAlgebra right_church_reduct(const TableAlgebra& alg, int i) {
  const int n = alg.dim().value();
  if (i < 1 || i > n) throw SubscriptError("index i out of range");
  return church_table(alg, IndexSet::singleton(i), alg.constant(i), std::nullopt);
}

SkewAlgebra skew_reduct(const TableAlgebra& alg, int i) {
  const int n = alg.dim().value();
  if (i < 1 || i > n) throw SubscriptError("index i out of range");
  const std::size_t s = alg.size();
  const IndexSet d = IndexSet::singleton(i);
  SkewAlgebra sk;
  sk.size = s;
  sk.zero = alg.constant(i);
  sk.labels = alg.labels();
  sk.meet.resize(s * s);
  sk.join.resize(s * s);
  sk.minus.resize(s * s);
  for (Index a = 0; a < s; ++a)
    for (Index b = 0; b < s; ++b) {
      sk.meet[a * s + b] = derived_bin(alg, BinKind::meet, d, a, b);
      sk.join[a * s + b] = derived_bin(alg, BinKind::barvee, d, a, b);
      sk.minus[a * s + b] = derived_bin(alg, BinKind::minus, d, a, b);
    }
  return sk;
}

Reduct reduct(const TableAlgebra& alg, const ReductKind& kind) {
  switch (kind.tag) {
    case ReductKind::Tag::church:
      return church_reduct(alg, kind.d, kind.i, kind.j);
    case ReductKind::Tag::right_church:
      return right_church_reduct(alg, kind.i);
    case ReductKind::Tag::skew:
      return skew_reduct(alg, kind.i);
  }
  throw PreconditionError("unknown reduct kind");
}

StarAlgebra to_star(const TableAlgebra& alg) {
  const int n = alg.dim().value();
  StarAlgebra st;
  st.n = alg.dim();
  st.size = alg.size();
  st.labels = alg.labels();
  for (int k = 1; k <= n; ++k) {
    st.t.push_back(church_table(alg, IndexSet::singleton(k), alg.constant(k), std::nullopt).t);
    st.zeros.push_back(alg.constant(k));
  }
  return st;
}

TableAlgebra from_star(const StarAlgebra& st) {
  const std::size_t s = st.size;
  const std::size_t arity = static_cast<std::size_t>(st.n.value()) + 1;
  if (st.t.size() != arity - 1 || st.zeros.size() != arity - 1) throw ShapeError("star algebra needs n tables");
  const std::uint64_t rows = saturating_pow(s, arity);
  if (rows > 50'000'000ull) throw BudgetExceeded("q table too large");
  std::vector<Index> q(static_cast<std::size_t>(rows));
  std::vector<Index> args(arity, 0);
  for (std::size_t row = 0; row < q.size(); ++row) {
    std::size_t r = row;
    for (std::size_t p = arity; p-- > 0;) {
      args[p] = static_cast<Index>(r % s);
      r /= s;
    }
    q[row] = qt_eval(st, args[0], std::span<const Index>(args).subspan(1));
  }
  return TableAlgebra(st.n, s, st.zeros, std::move(q), st.labels);
}

// ---------------------------------------------------------------------------
// Audit engine

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::nba: return "NBA";
    case Suite::skew_lattice: return "SKEW_LATTICE";
    case Suite::skew_ba: return "SKEW_BA";
    case Suite::right_handed: return "RIGHT_HANDED";
    case Suite::srca: return "SRCA";
    case Suite::skew_star: return "SKEW_STAR";
    case Suite::boolean: return "BOOLEAN";
  }
  return "?";
}

bool AxiomReport::ok() const {
  for (const auto& a : axioms)
    if (!a.ok) return false;
  return true;
}

bool AxiomReport::sampled() const {
  for (const auto& a : axioms)
    if (a.mode == CheckMode::sampled) return true;
  return false;
}

const AxiomOutcome* AxiomReport::first_failure() const {
  for (const auto& a : axioms)
    if (!a.ok) return &a;
  return nullptr;
}

const AxiomOutcome* AxiomReport::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

AxiomOutcome audit_identity(const Identity& id, std::size_t carrier, const AuditOptions& opts) {
  AxiomOutcome out;
  out.name = id.name;
  if (carrier == 0) return out;
  const std::size_t k = id.vars.size();
  std::vector<Index> a(k, 0);
  auto fail = [&]() {
    out.ok = false;
    for (std::size_t v = 0; v < k; ++v) out.counterexample.emplace_back(id.vars[v], a[v]);
  };
  const std::uint64_t total = saturating_pow(carrier, k);
  if (total <= opts.budget) {
    out.mode = CheckMode::exhaustive;
    for (std::uint64_t c = 0; c < total; ++c) {
      ++out.checked;
      if (!id.holds(a)) {
        fail();
        return out;
      }
      for (std::size_t pos = k; pos-- > 0;) {
        if (a[pos] + 1 < carrier) {
          ++a[pos];
          break;
        }
        a[pos] = 0;
      }
    }
    return out;
  }
  out.mode = CheckMode::sampled;
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    for (auto& x : a) x = static_cast<Index>(rng() % carrier);
    ++out.checked;
    if (!id.holds(a)) {
      fail();
      return out;
    }
  }
  return out;
}

AxiomReport audit(Suite suite, const std::vector<Identity>& ids, std::size_t carrier,
                  const AuditOptions& opts) {
  AxiomReport r;
  r.suite = suite;
  r.seed = opts.seed;
  for (const auto& id : ids) r.axioms.push_back(audit_identity(id, carrier, opts));
  return r;
}

// ---------------------------------------------------------------------------
// Suites

std::vector<Identity> nba_identities(const TableAlgebra& alg) {
  const int n = alg.dim().value();
  const std::size_t nn = static_cast<std::size_t>(n);
  std::vector<Identity> ids;

  Identity b0{"B0", {}, nullptr};
  for (int k = 1; k <= n; ++k) b0.vars.push_back("x" + std::to_string(k));
  b0.holds = [&alg, nn](std::span<const Index> v) {
    for (std::size_t k = 0; k < nn; ++k)
      if (alg.q(alg.constant(static_cast<int>(k) + 1), v) != v[k]) return false;
    return true;
  };
  ids.push_back(std::move(b0));

  ids.push_back({"B1", names({"y", "x"}), [&alg, nn](std::span<const Index> v) {
                   const std::vector<Index> ys(nn, v[1]);
                   return alg.q(v[0], ys) == v[1];
                 }});

  Identity b2{"B2", {"y"}, nullptr};
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) b2.vars.push_back(sub_name("x", a, b, n));
  b2.holds = [&alg, nn](std::span<const Index> v) {
    const Index y = v[0];
    std::vector<Index> inner(nn), diag(nn);
    for (std::size_t a = 0; a < nn; ++a) {
      inner[a] = alg.q(y, v.subspan(1 + a * nn, nn));
      diag[a] = v[1 + a * nn + a];
    }
    return alg.q(y, inner) == alg.q(y, diag);
  };
  ids.push_back(std::move(b2));

  // q(y, q(x_{1,0..n}), ..., q(x_{n,0..n})) = q(q(y, x_{1,0}..x_{n,0}), ..., q(y, x_{1,n}..x_{n,n}))
  Identity b3{"B3", {"y"}, nullptr};
  for (int a = 1; a <= n; ++a)
    for (int b = 0; b <= n; ++b) b3.vars.push_back(sub_name("x", a, b, n));
  b3.holds = [&alg, nn](std::span<const Index> v) {
    const Index y = v[0];
    const std::size_t row = nn + 1;
    std::vector<Index> lhs(nn);
    for (std::size_t a = 0; a < nn; ++a) lhs[a] = alg.q_args(v.subspan(1 + a * row, row));
    std::vector<Index> rhs(row), column(nn);
    for (std::size_t b = 0; b < row; ++b) {
      for (std::size_t a = 0; a < nn; ++a) column[a] = v[1 + a * row + b];
      rhs[b] = alg.q(y, column);
    }
    return alg.q(y, lhs) == alg.q_args(rhs);
  };
  ids.push_back(std::move(b3));

  ids.push_back({"B4", names({"y"}), [&alg](std::span<const Index> v) {
                   return alg.q(v[0], alg.constants()) == v[0];
                 }});
  return ids;
}

std::vector<Identity> skew_identities(const SkewAlgebra& sk, Suite suite) {
  const SkewAlgebra* p = &sk;
  std::vector<Identity> ids;
  if (suite == Suite::right_handed) {
    ids.push_back({"right-handed", names({"x", "y"}), [p](std::span<const Index> v) {
                     return p->m(p->m(v[0], v[1]), v[0]) == p->m(v[1], v[0]);
                   }});
    return ids;
  }
  if (suite != Suite::skew_lattice && suite != Suite::skew_ba)
    throw PreconditionError(std::string("suite ") + suite_name(suite) + " does not apply to a skew algebra");

  ids.push_back({"S1-assoc-meet", names({"x", "y", "z"}), [p](std::span<const Index> v) {
                   return p->m(p->m(v[0], v[1]), v[2]) == p->m(v[0], p->m(v[1], v[2]));
                 }});
  ids.push_back({"S1-assoc-join", names({"x", "y", "z"}), [p](std::span<const Index> v) {
                   return p->j(p->j(v[0], v[1]), v[2]) == p->j(v[0], p->j(v[1], v[2]));
                 }});
  ids.push_back({"S1-idem-meet", names({"x"}),
                 [p](std::span<const Index> v) { return p->m(v[0], v[0]) == v[0]; }});
  ids.push_back({"S1-idem-join", names({"x"}),
                 [p](std::span<const Index> v) { return p->j(v[0], v[0]) == v[0]; }});
  // x∨(x∧y) = x = x∧(x∨y)
  ids.push_back({"S1-absorb-left", names({"x", "y"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1];
                   return p->j(x, p->m(x, y)) == x && p->m(x, p->j(x, y)) == x;
                 }});
  // (y∧x)∨x = x = (y∨x)∧x
  ids.push_back({"S1-absorb-right", names({"x", "y"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1];
                   return p->j(p->m(y, x), x) == x && p->m(p->j(y, x), x) == x;
                 }});
  if (suite == Suite::skew_lattice) return ids;

  ids.push_back({"S1-normality", names({"x", "y", "z"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1], z = v[2];
                   return p->m(p->m(p->m(x, y), z), x) == p->m(p->m(p->m(x, z), y), x);
                 }});
  ids.push_back({"S1-distrib-left", names({"x", "y", "z"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1], z = v[2];
                   return p->m(x, p->j(y, z)) == p->j(p->m(x, y), p->m(x, z));
                 }});
  ids.push_back({"S1-distrib-right", names({"x", "y", "z"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1], z = v[2];
                   return p->m(p->j(y, z), x) == p->j(p->m(y, x), p->m(z, x));
                 }});
  ids.push_back({"S2-zero", names({"x"}), [p](std::span<const Index> v) {
                   return p->m(p->zero, v[0]) == p->zero && p->m(v[0], p->zero) == p->zero;
                 }});
  ids.push_back({"S3-join", names({"x", "y"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1];
                   const Index xyx = p->m(p->m(x, y), x);
                   return p->j(xyx, p->d(x, y)) == x && p->j(p->d(x, y), xyx) == x;
                 }});
  ids.push_back({"S3-meet", names({"x", "y"}), [p](std::span<const Index> v) {
                   const Index x = v[0], y = v[1];
                   const Index xyx = p->m(p->m(x, y), x);
                   return p->m(xyx, p->d(x, y)) == p->zero && p->m(p->d(x, y), xyx) == p->zero;
                 }});
  return ids;
}

std::vector<Identity> srca_identities(const ChurchAlgebra& ch) {
  // Non-owning view; the caller keeps `ch` alive for the audit.
  return srca_from(std::shared_ptr<const ChurchAlgebra>(&ch, [](const ChurchAlgebra*) {}), "");
}

std::vector<Identity> skew_star_identities(const StarAlgebra& st) {
  const int n = st.n.value();
  const StarAlgebra* p = &st;
  std::vector<Identity> ids;
  for (int i = 1; i <= n; ++i) {
    auto ch = std::make_shared<ChurchAlgebra>();
    ch->size = st.size;
    ch->t = st.t[static_cast<std::size_t>(i - 1)];
    ch->zero = st.zeros[static_cast<std::size_t>(i - 1)];
    for (auto& id : srca_from(ch, "N0[" + std::to_string(i) + "]-")) ids.push_back(std::move(id));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      const Index zj = st.zeros[static_cast<std::size_t>(j - 1)];
      ids.push_back({"N1" + tag, names({"y", "z"}), [p, i, zj](std::span<const Index> v) {
                       return p->at(i, zj, v[0], v[1]) == v[0];
                     }});
    }
  ids.push_back({"N2", names({"x"}), [p](std::span<const Index> v) {
                   return qt_eval(*p, v[0], p->zeros) == v[0];
                 }});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      ids.push_back({"N3" + tag, names({"x", "y", "z", "u"}), [p, i, j](std::span<const Index> v) {
                       const Index x = v[0], y = v[1], z = v[2], u = v[3];
                       return p->at(i, x, p->at(j, x, y, z), u) == p->at(j, x, p->at(i, x, y, u), z);
                     }});
    }
  for (int i = 1; i <= n; ++i)
    ids.push_back({"N4[" + std::to_string(i) + "]", names({"x", "y", "z"}),
                   [p, i, n](std::span<const Index> v) {
                     std::vector<Index> ys(static_cast<std::size_t>(n), v[1]);
                     ys[static_cast<std::size_t>(i - 1)] = v[2];
                     return p->at(i, v[0], v[1], v[2]) == qt_eval(*p, v[0], ys);
                   }});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      ids.push_back({"N5" + tag, names({"x", "y1", "y2", "y3", "z1", "z2", "z3"}),
                     [p, i, j](std::span<const Index> v) {
                       const Index x = v[0];
                       const Index lhs = p->at(i, x, p->at(j, v[1], v[2], v[3]), p->at(j, v[4], v[5], v[6]));
                       const Index rhs = p->at(j, p->at(i, x, v[1], v[4]), p->at(i, x, v[2], v[5]),
                                               p->at(i, x, v[3], v[6]));
                       return lhs == rhs;
                     }});
    }
  return ids;
}

AxiomReport check_axioms(const TableAlgebra& alg, Suite suite, const AuditOptions& opts) {
  if (suite != Suite::nba)
    throw PreconditionError(std::string("suite ") + suite_name(suite) + " does not apply to a q table");
  return audit(suite, nba_identities(alg), alg.size(), opts);
}

AxiomReport check_axioms(const SkewAlgebra& alg, Suite suite, const AuditOptions& opts) {
  return audit(suite, skew_identities(alg, suite), alg.size, opts);
}

AxiomReport check_axioms(const ChurchAlgebra& alg, Suite suite, const AuditOptions& opts) {
  if (suite != Suite::srca)
    throw PreconditionError(std::string("suite ") + suite_name(suite) + " does not apply to a Church algebra");
  return audit(suite, srca_identities(alg), alg.size, opts);
}

AxiomReport check_axioms(const StarAlgebra& alg, Suite suite, const AuditOptions& opts) {
  if (suite != Suite::skew_star)
    throw PreconditionError(std::string("suite ") + suite_name(suite) + " does not apply to a star algebra");
  return audit(suite, skew_star_identities(alg), alg.size, opts);
}

// ---------------------------------------------------------------------------
// Relations

RelationBundle relations(const SkewAlgebra& sk) {
  const AxiomReport rep = check_axioms(sk, Suite::skew_lattice);
  if (const auto* f = rep.first_failure())
    throw PreconditionError("not a skew lattice: " + f->name + " fails");
  const std::size_t s = sk.size;
  RelationBundle rb;
  rb.size = s;
  const RelationBundle::Matrix empty(s, std::vector<bool>(s, false));
  rb.le = rb.pre = rb.pre_l = rb.pre_r = rb.D = rb.L = rb.R = empty;
  for (Index x = 0; x < s; ++x)
    for (Index y = 0; y < s; ++y) {
      rb.le[x][y] = sk.m(x, y) == x && sk.m(y, x) == x;
      rb.pre[x][y] = sk.m(sk.m(x, y), x) == x;
      rb.pre_l[x][y] = sk.m(x, y) == x;
      rb.pre_r[x][y] = sk.m(y, x) == x;
    }
  for (std::size_t x = 0; x < s; ++x)
    for (std::size_t y = 0; y < s; ++y) {
      rb.D[x][y] = rb.pre[x][y] && rb.pre[y][x];
      rb.L[x][y] = rb.pre_l[x][y] && rb.pre_l[y][x];
      rb.R[x][y] = rb.pre_r[x][y] && rb.pre_r[y][x];
    }
  rb.right_handed = rb.R == rb.D;
  return rb;
}

Congruence equivalence_of(const RelationBundle::Matrix& rel) {
  const std::size_t s = rel.size();
  std::vector<Index> labels(s);
  for (std::size_t x = 0; x < s; ++x) {
    if (rel[x].size() != s) throw ShapeError("relation matrix is not square");
    if (!rel[x][x]) throw PreconditionError("relation is not reflexive");
    std::size_t first = x;
    for (std::size_t y = 0; y < s; ++y) {
      if (rel[x][y] != rel[y][x]) throw PreconditionError("relation is not symmetric");
      if (rel[x][y] && first == x && y < x) first = y;
    }
    labels[x] = static_cast<Index>(first);
  }
  for (std::size_t x = 0; x < s; ++x)
    for (std::size_t y = 0; y < s; ++y)
      if (rel[x][y] != (labels[x] == labels[y])) throw PreconditionError("relation is not transitive");
  return Congruence::from_labels(labels);
}

// ---------------------------------------------------------------------------
// Element kinds

AxiomReport element_kind_report(const TableAlgebra& alg, Index e, ElementKind kind, int i,
                                const AuditOptions& opts) {
  if (e >= alg.size()) throw ShapeError("element index out of range");
  std::vector<Identity> ids;
  auto church = std::make_shared<ChurchAlgebra>();
  if (kind == ElementKind::semicentral) {
    *church = right_church_reduct(alg, i);
    for (const auto& id : semicentral_identities(church)) ids.push_back(bind_first(id, e));
    return audit(Suite::srca, ids, alg.size(), opts);
  }
  for (const auto& id : factor_identities(alg)) ids.push_back(bind_first(id, e));
  if (kind == ElementKind::central)
    ids.push_back({"central", {}, [&alg, e](std::span<const Index>) {
                     return alg.q(e, alg.constants()) == e;
                   }});
  return audit(Suite::nba, ids, alg.size(), opts);
}

bool is_element_kind(const TableAlgebra& alg, Index e, ElementKind kind, int i, const AuditOptions& opts) {
  return element_kind_report(alg, e, kind, i, opts).ok();
}

// ---------------------------------------------------------------------------
// Boolean center

bool BooleanCenter::contains(Index x) const {
  return x < position.size() && position[x] != static_cast<std::size_t>(-1);
}

std::size_t BooleanCenter::pos(Index x) const {
  if (!contains(x)) throw PreconditionError("element is not in the Boolean center");
  return position[x];
}

BooleanCenter boolean_center(const TableAlgebra& alg, CenterParams cp) {
  const int n = alg.dim().value();
  cp.check(n);
  constexpr auto npos = static_cast<std::size_t>(-1);
  BooleanCenter bc;
  bc.cp = cp;
  bc.position.assign(alg.size(), npos);
  const Index ej = alg.constant(cp.j);
  for (Index x = 0; x < alg.size(); ++x)
    if (meet_i(alg, cp.i, x, ej) == x) {
      bc.position[x] = bc.carrier.size();
      bc.carrier.push_back(x);
    }
  const std::size_t s = bc.carrier.size();
  bc.bottom = bc.pos(alg.constant(cp.i));
  bc.top = bc.pos(ej);
  bc.meet.resize(s * s);
  bc.join.resize(s * s);
  bc.neg.resize(s);
  for (std::size_t a = 0; a < s; ++a) {
    bc.neg[a] = bc.pos(boolean_negation(alg, cp, bc.carrier[a]));
    for (std::size_t b = 0; b < s; ++b) {
      bc.meet[a * s + b] = bc.pos(meet_i(alg, cp.i, bc.carrier[a], bc.carrier[b]));
      bc.join[a * s + b] = bc.pos(join_i(alg, cp.i, bc.carrier[a], bc.carrier[b]));
    }
  }
  for (std::size_t a = 0; a < s; ++a) {
    if (a == bc.bottom) continue;
    bool atom = true;
    for (std::size_t b = 0; b < s && atom; ++b)
      if (b != a && b != bc.bottom && bc.leq(b, a)) atom = false;
    if (atom) bc.atoms.push_back(a);
  }
  if (bc.atoms.size() > 64) throw BudgetExceeded("Boolean center has more than 64 atoms");
  bc.masks.assign(s, 0);
  for (std::size_t x = 0; x < s; ++x)
    for (std::size_t a = 0; a < bc.atoms.size(); ++a)
      if (bc.leq(bc.atoms[a], x)) bc.masks[x] |= std::uint64_t{1} << a;
  return bc;
}

AxiomReport audit_boolean(const BooleanCenter& bc, const AuditOptions& opts) {
  const BooleanCenter* p = &bc;
  const std::size_t s = bc.size();
  auto m = [p, s](std::size_t a, std::size_t b) { return p->meet[a * s + b]; };
  auto j = [p, s](std::size_t a, std::size_t b) { return p->join[a * s + b]; };
  std::vector<Identity> ids;
  ids.push_back({"comm-meet", names({"x", "y"}),
                 [m](std::span<const Index> v) { return m(v[0], v[1]) == m(v[1], v[0]); }});
  ids.push_back({"comm-join", names({"x", "y"}),
                 [j](std::span<const Index> v) { return j(v[0], v[1]) == j(v[1], v[0]); }});
  ids.push_back({"assoc-meet", names({"x", "y", "z"}), [m](std::span<const Index> v) {
                   return m(m(v[0], v[1]), v[2]) == m(v[0], m(v[1], v[2]));
                 }});
  ids.push_back({"assoc-join", names({"x", "y", "z"}), [j](std::span<const Index> v) {
                   return j(j(v[0], v[1]), v[2]) == j(v[0], j(v[1], v[2]));
                 }});
  ids.push_back({"absorb", names({"x", "y"}), [m, j](std::span<const Index> v) {
                   return m(v[0], j(v[0], v[1])) == v[0] && j(v[0], m(v[0], v[1])) == v[0];
                 }});
  ids.push_back({"distrib", names({"x", "y", "z"}), [m, j](std::span<const Index> v) {
                   return m(v[0], j(v[1], v[2])) == j(m(v[0], v[1]), m(v[0], v[2])) &&
                          j(v[0], m(v[1], v[2])) == m(j(v[0], v[1]), j(v[0], v[2]));
                 }});
  ids.push_back({"complement", names({"x"}), [p, m, j](std::span<const Index> v) {
                   return m(v[0], p->neg[v[0]]) == p->bottom && j(v[0], p->neg[v[0]]) == p->top;
                 }});
  ids.push_back({"bounds", names({"x"}), [p, m, j](std::span<const Index> v) {
                   return m(v[0], p->top) == v[0] && j(v[0], p->bottom) == v[0];
                 }});
  return audit(Suite::boolean, ids, s, opts);
}

std::pair<Congruence, Congruence> factor_congruences_of(const TableAlgebra& alg, Index e, int i) {
  if (e >= alg.size()) throw ShapeError("element index out of range");
  const ChurchAlgebra ch = right_church_reduct(alg, i);
  const std::size_t s = alg.size();
  RelationBundle::Matrix phi(s, std::vector<bool>(s)), phibar(s, std::vector<bool>(s));
  for (Index x = 0; x < s; ++x)
    for (Index y = 0; y < s; ++y) {
      const Index r = ch.at(e, x, y);
      phi[x][y] = r == x;
      phibar[x][y] = r == y;
    }
  return {equivalence_of(phi), equivalence_of(phibar)};
}

}  // namespace nba
