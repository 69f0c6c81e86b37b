#include "nba/ideals_congruences.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nba {

namespace {

constexpr std::uint64_t kCheckBudget = 200'000'000ull;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<Index> parent_;
};

std::vector<std::uint64_t> place_weights(std::size_t s, std::size_t arity) {
  std::vector<std::uint64_t> w(arity, 1);
  for (std::size_t p = arity - 1; p-- > 0;) w[p] = w[p + 1] * s;
  return w;
}

/// Decodes a q-table row into its argument tuple.
void decode_row(std::size_t row, std::size_t s, std::vector<Index>& args) {
  for (std::size_t p = args.size(); p-- > 0;) {
    args[p] = static_cast<Index>(row % s);
    row /= s;
  }
}

std::string describe(const TableAlgebra& alg, Index x) {
  if (alg.has_labels()) return to_string(alg.label(x));
  return "#" + std::to_string(x);
}

std::string describe_args(const TableAlgebra& alg, const std::vector<Index>& args) {
  std::string out = "q(";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k) out += ",";
    out += describe(alg, args[k]);
  }
  return out + ")";
}

/// Membership table: which[x] = k (1-based) or 0, plus overlap detection.
struct Membership {
  std::vector<int> which;
  bool overlap = false;
  Index overlap_at = 0;
};

Membership membership(std::size_t size, const std::vector<std::vector<Index>>& comps) {
  Membership m;
  m.which.assign(size, 0);
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (Index x : comps[k]) {
      if (m.which[x] != 0 && m.which[x] != static_cast<int>(k) + 1 && !m.overlap) {
        m.overlap = true;
        m.overlap_at = x;
      }
      m.which[x] = static_cast<int>(k) + 1;
    }
  return m;
}

std::vector<std::vector<Index>> normalized(std::vector<std::vector<Index>> comps) {
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return comps;
}

/// First violation of m2 or m3 for disjoint components, as (clause, witness).
std::optional<std::pair<std::string, std::string>> closure_violation(
    const TableAlgebra& alg, const std::vector<std::vector<Index>>& comps, const std::vector<int>& which) {
  const std::size_t n = static_cast<std::size_t>(alg.dim().value());
  const std::size_t s = alg.size();
  std::vector<Index> args(n + 1);

  // m2: a ∈ I_r, b ∈ I_k, arbitrary y elsewhere ⇒ q(a, ..., b at r, ...) ∈ I_k.
  std::uint64_t cost = 0;
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t k = 1; k <= n; ++k)
      cost += comps[r - 1].size() * comps[k - 1].size() * saturating_pow(s, n - 1);
  if (cost > kCheckBudget) throw BudgetExceeded("multideal closure check exceeds its budget");
  for (std::size_t r = 1; r <= n; ++r)
    for (Index a : comps[r - 1])
      for (std::size_t k = 1; k <= n; ++k)
        for (Index b : comps[k - 1]) {
          const std::uint64_t fills = saturating_pow(s, n - 1);
          for (std::uint64_t f = 0; f < fills; ++f) {
            std::uint64_t c = f;
            for (std::size_t p = n; p >= 1; --p) {
              if (p == r) continue;
              args[p] = static_cast<Index>(c % s);
              c /= s;
            }
            args[0] = a;
            args[r] = b;
            const Index v = alg.q_args(args);
            if (which[v] != static_cast<int>(k))
              return std::make_pair(std::string("m2"), describe_args(alg, args) + " = " + describe(alg, v) +
                                                           " is not in I_" + std::to_string(k));
          }
        }

  // m3: y_1..y_n ∈ I_k ⇒ q(a, y) ∈ I_k.
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& ck = comps[k - 1];
    const std::uint64_t fills = saturating_pow(ck.size(), n);
    if (s * fills > kCheckBudget) throw BudgetExceeded("multideal closure check exceeds its budget");
    for (Index a = 0; a < s; ++a)
      for (std::uint64_t f = 0; f < fills; ++f) {
        std::uint64_t c = f;
        for (std::size_t p = n; p >= 1; --p) {
          args[p] = ck[c % ck.size()];
          c /= ck.size();
        }
        args[0] = a;
        const Index v = alg.q_args(args);
        if (which[v] != static_cast<int>(k))
          return std::make_pair(std::string("m3"), describe_args(alg, args) + " = " + describe(alg, v) +
                                                       " is not in I_" + std::to_string(k));
      }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Congruences

Congruence congruence_generated(const TableAlgebra& alg, std::span<const std::pair<Index, Index>> pairs) {
  const std::size_t s = alg.size();
  const std::size_t arity = static_cast<std::size_t>(alg.dim().value()) + 1;
  const auto w = place_weights(s, arity);
  const auto& q = alg.q_table();
  UnionFind uf(s);
  std::vector<std::pair<Index, Index>> work;
  for (const auto& [a, b] : pairs) {
    if (a >= s || b >= s) throw ShapeError("pair outside the carrier");
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  while (!work.empty()) {
    const auto [a, b] = work.back();
    work.pop_back();
    for (std::size_t p = 0; p < arity; ++p) {
      // Rows whose digit p is a, paired with the same row with digit p replaced by b.
      const std::uint64_t lo_count = w[p];
      const std::uint64_t hi_count = saturating_pow(s, p);
      for (std::uint64_t hi = 0; hi < hi_count; ++hi)
        for (std::uint64_t lo = 0; lo < lo_count; ++lo) {
          const std::uint64_t base = hi * s * w[p] + lo;
          const Index x = q[base + a * w[p]];
          const Index y = q[base + b * w[p]];
          if (uf.unite(x, y)) work.emplace_back(x, y);
        }
    }
  }
  std::vector<Index> labels(s);
  for (Index x = 0; x < s; ++x) labels[x] = uf.find(x);
  return Congruence::from_labels(labels);
}

std::vector<Congruence> all_congruences(const TableAlgebra& alg, std::size_t bound) {
  const std::size_t s = alg.size();
  if (s > bound)
    throw BudgetExceeded("carrier of " + std::to_string(s) + " elements exceeds the bound " + std::to_string(bound));
  std::set<std::vector<Index>> seen;
  std::vector<Congruence> found;
  auto add = [&](const Congruence& c) {
    if (seen.insert(c.labels()).second) {
      found.push_back(c);
      return true;
    }
    return false;
  };
  add(Congruence::diagonal(s));
  for (Index a = 0; a < s; ++a)
    for (Index b = a + 1; b < s; ++b) {
      const std::pair<Index, Index> p{a, b};
      add(congruence_generated(alg, std::span<const std::pair<Index, Index>>(&p, 1)));
    }
  const std::size_t principal = found.size();
  for (std::size_t idx = 0; idx < found.size(); ++idx)
    for (std::size_t g = 1; g < principal; ++g) add(found[idx].join(found[g]));
  std::sort(found.begin(), found.end(), [](const Congruence& x, const Congruence& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x.labels() < y.labels();
  });
  return found;
}

// ---------------------------------------------------------------------------
// Multideals

Multideal Multideal::proper(std::vector<std::vector<Index>> components) {
  Multideal m;
  m.components_ = normalized(std::move(components));
  return m;
}

Multideal Multideal::degenerate() {
  Multideal m;
  m.degenerate_ = true;
  return m;
}

bool Multideal::contains(int k, Index x) const {
  if (degenerate_) return true;
  const auto& c = component(k);
  return std::binary_search(c.begin(), c.end(), x);
}

std::optional<int> Multideal::component_of(Index x) const {
  if (degenerate_) return std::nullopt;
  for (std::size_t k = 0; k < components_.size(); ++k)
    if (std::binary_search(components_[k].begin(), components_[k].end(), x)) return static_cast<int>(k) + 1;
  return std::nullopt;
}

std::vector<Index> Multideal::carrier() const {
  std::vector<Index> out;
  for (const auto& c : components_) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Multideal::is_ultra(std::size_t algebra_size) const {
  return !degenerate_ && carrier().size() == algebra_size;
}

MultidealVerdict validate_multideal(const TableAlgebra& alg, const std::vector<std::vector<Index>>& candidate) {
  const int n = alg.dim().value();
  const std::size_t s = alg.size();
  MultidealVerdict v;
  auto invalid = [&](std::string clause, std::string witness) {
    v.kind = MultidealVerdict::Kind::invalid;
    v.clause = std::move(clause);
    v.witness = std::move(witness);
    return v;
  };
  if (candidate.size() != static_cast<std::size_t>(n))
    return invalid("shape", "expected " + std::to_string(n) + " components, got " + std::to_string(candidate.size()));
  for (const auto& c : candidate)
    for (Index x : c)
      if (x >= s) return invalid("shape", "element index " + std::to_string(x) + " outside the carrier");
  const auto comps = normalized(candidate);

  bool all_full = true;
  for (const auto& c : comps) all_full = all_full && c.size() == s;
  if (all_full) {
    v.kind = MultidealVerdict::Kind::degenerate;
    return v;
  }
  for (int r = 1; r <= n; ++r)
    for (int k = 1; k <= n; ++k) {
      const auto& cr = comps[static_cast<std::size_t>(r - 1)];
      if (r != k && std::binary_search(cr.begin(), cr.end(), alg.constant(k))) {
        v.kind = MultidealVerdict::Kind::degenerate;
        v.clause = "m1";
        v.witness = "e" + std::to_string(k) + " ∈ I_" + std::to_string(r);
        return v;
      }
    }

  const Membership mem = membership(s, comps);
  if (mem.overlap) return invalid("disjoint", describe(alg, mem.overlap_at) + " lies in two components");
  for (int k = 1; k <= n; ++k)
    if (mem.which[alg.constant(k)] != k) return invalid("m1", "e" + std::to_string(k) + " ∉ I_" + std::to_string(k));
  if (auto bad = closure_violation(alg, comps, mem.which)) return invalid(bad->first, bad->second);
  return v;
}

Multideal multideal_of(const TableAlgebra& alg, const Congruence& theta) {
  if (theta.size() != alg.size()) throw ShapeError("congruence size does not match algebra");
  const int n = alg.dim().value();
  std::vector<Index> const_blocks;
  for (int k = 1; k <= n; ++k) const_blocks.push_back(theta.block(alg.constant(k)));
  std::vector<Index> sorted = const_blocks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Multideal::degenerate();
  std::vector<std::vector<Index>> comps(static_cast<std::size_t>(n));
  for (Index x = 0; x < alg.size(); ++x)
    for (int k = 1; k <= n; ++k)
      if (theta.block(x) == const_blocks[static_cast<std::size_t>(k - 1)])
        comps[static_cast<std::size_t>(k - 1)].push_back(x);
  return Multideal::proper(std::move(comps));
}

Congruence theta_of(const TableAlgebra& alg, const Multideal& I, CenterParams cp) {
  if (I.is_degenerate()) throw PreconditionError("theta_of needs a proper multideal");
  cp.check(alg.dim().value());
  const BooleanCenter bc = boolean_center(alg, cp);
  std::uint64_t m = 0;
  for (Index x : I.component(cp.i))
    if (bc.contains(x)) m |= bc.mask_of(x);
  std::map<std::vector<std::uint64_t>, Index> ids;
  std::vector<Index> labels(alg.size());
  for (Index x = 0; x < alg.size(); ++x) {
    std::vector<std::uint64_t> sig;
    for (Index c : coordinates(alg, x, cp)) sig.push_back(bc.mask_of(c) & ~m);
    labels[x] = ids.emplace(std::move(sig), static_cast<Index>(ids.size())).first->second;
  }
  return Congruence::from_labels(labels);
}

Multideal ideal_closure(const TableAlgebra& alg, const std::vector<std::vector<Index>>& seed) {
  const int n = alg.dim().value();
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t s = alg.size();
  if (seed.size() != nn) throw ShapeError("seed needs n components");
  std::vector<int> which(s, 0);
  std::vector<std::vector<Index>> comps(nn);
  // Returns false on a collision, which makes the closure degenerate.
  auto add = [&](Index x, int k) {
    if (x >= s) throw ShapeError("seed element outside the carrier");
    if (which[x] == k) return true;
    if (which[x] != 0) return false;
    which[x] = k;
    comps[static_cast<std::size_t>(k - 1)].push_back(x);
    return true;
  };
  for (int k = 1; k <= n; ++k)
    if (!add(alg.constant(k), k)) return Multideal::degenerate();
  for (std::size_t k = 0; k < nn; ++k)
    for (Index x : seed[k])
      if (!add(x, static_cast<int>(k) + 1)) return Multideal::degenerate();

  std::vector<Index> args(nn + 1);
  for (bool changed = true; changed;) {
    changed = false;
    const auto snapshot = comps;
    for (std::size_t r = 1; r <= nn; ++r)
      for (Index a : snapshot[r - 1])
        for (std::size_t k = 1; k <= nn; ++k)
          for (Index b : snapshot[k - 1]) {
            const std::uint64_t fills = saturating_pow(s, nn - 1);
            for (std::uint64_t f = 0; f < fills; ++f) {
              std::uint64_t c = f;
              for (std::size_t p = nn; p >= 1; --p) {
                if (p == r) continue;
                args[p] = static_cast<Index>(c % s);
                c /= s;
              }
              args[0] = a;
              args[r] = b;
              const Index v = alg.q_args(args);
              const std::size_t before = comps[k - 1].size();
              if (!add(v, static_cast<int>(k))) return Multideal::degenerate();
              changed = changed || comps[k - 1].size() != before;
            }
          }
    for (std::size_t k = 1; k <= nn; ++k) {
      const auto ck = comps[k - 1];
      const std::uint64_t fills = saturating_pow(ck.size(), nn);
      for (Index a = 0; a < s; ++a)
        for (std::uint64_t f = 0; f < fills; ++f) {
          std::uint64_t c = f;
          for (std::size_t p = nn; p >= 1; --p) {
            args[p] = ck[c % ck.size()];
            c /= ck.size();
          }
          args[0] = a;
          const Index v = alg.q_args(args);
          const std::size_t before = comps[k - 1].size();
          if (!add(v, static_cast<int>(k))) return Multideal::degenerate();
          changed = changed || comps[k - 1].size() != before;
        }
    }
  }
  return Multideal::proper(std::move(comps));
}

std::vector<Multideal> all_multideals(const TableAlgebra& alg, std::size_t bound) {
  std::vector<Multideal> out;
  for (const auto& c : all_congruences(alg, bound)) {
    Multideal m = multideal_of(alg, c);
    if (m.is_proper()) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ultramultideals

std::vector<Index> admissible_atoms(const TableAlgebra& alg, const Multideal& I, CenterParams cp) {
  if (I.is_degenerate()) throw PreconditionError("the degenerate multideal has no ultra extension");
  const BooleanCenter bc = boolean_center(alg, cp);
  std::uint64_t m = 0;
  for (Index x : I.component(cp.i))
    if (bc.contains(x)) m |= bc.mask_of(x);
  std::vector<Index> out;
  for (std::size_t a = 0; a < bc.atoms.size(); ++a)
    if (!((m >> a) & 1u)) out.push_back(bc.carrier[bc.atoms[a]]);
  return out;
}

Multideal extend_to_ultra(const TableAlgebra& alg, const Multideal& I, CenterParams cp, Index atom) {
  const auto ok = admissible_atoms(alg, I, cp);
  if (std::find(ok.begin(), ok.end(), atom) == ok.end())
    throw PreconditionError("atom " + describe(alg, atom) + " is not an admissible atom of B_ij");
  const BooleanCenter bc = boolean_center(alg, cp);
  const auto it = std::find(bc.atoms.begin(), bc.atoms.end(), bc.pos(atom));
  const std::uint64_t bit = std::uint64_t{1} << (it - bc.atoms.begin());
  const std::size_t n = static_cast<std::size_t>(alg.dim().value());
  std::vector<std::vector<Index>> G(n);
  for (Index x = 0; x < alg.size(); ++x) {
    const auto coords = coordinates(alg, x, cp);
    for (std::size_t k = 0; k < n; ++k)
      if (bc.mask_of(coords[k]) & bit) G[k].push_back(x);
  }
  return Multideal::proper(std::move(G));
}

std::vector<Multideal> all_ultramultideals(const TableAlgebra& alg, CenterParams cp) {
  const int n = alg.dim().value();
  std::vector<std::vector<Index>> minimum(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) minimum[static_cast<std::size_t>(k - 1)] = {alg.constant(k)};
  const Multideal base = Multideal::proper(std::move(minimum));
  std::vector<std::pair<std::vector<Value>, Multideal>> keyed;
  for (Index atom : admissible_atoms(alg, base, cp)) {
    Multideal u = extend_to_ultra(alg, base, cp, atom);
    keyed.emplace_back(ultra_to_hom(alg, u), std::move(u));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Multideal> out;
  for (auto& [h, u] : keyed) out.push_back(std::move(u));
  return out;
}

std::vector<Value> ultra_to_hom(const TableAlgebra& alg, const Multideal& U) {
  if (!U.is_ultra(alg.size())) throw PreconditionError("not an ultramultideal");
  std::vector<Value> h(alg.size());
  for (Index x = 0; x < alg.size(); ++x) h[x] = static_cast<Value>(*U.component_of(x));
  return h;
}

bool is_homomorphism_onto_generator(const TableAlgebra& alg, const std::vector<Value>& h) {
  const int n = alg.dim().value();
  if (h.size() != alg.size()) return false;
  for (Value v : h)
    if (v < 1 || v > n) return false;
  for (int k = 1; k <= n; ++k)
    if (h[alg.constant(k)] != k) return false;
  std::vector<Index> args(static_cast<std::size_t>(n) + 1);
  const auto& q = alg.q_table();
  for (std::size_t row = 0; row < q.size(); ++row) {
    decode_row(row, alg.size(), args);
    if (h[q[row]] != h[args[h[args[0]]]]) return false;
  }
  return true;
}

Multideal hom_to_ultra(const TableAlgebra& alg, const std::vector<Value>& h) {
  if (!is_homomorphism_onto_generator(alg, h)) throw PreconditionError("not a homomorphism onto the generator");
  std::vector<std::vector<Index>> G(static_cast<std::size_t>(alg.dim().value()));
  for (Index x = 0; x < alg.size(); ++x) G[h[x] - 1u].push_back(x);
  return Multideal::proper(std::move(G));
}

bool is_prime(const TableAlgebra& alg, const Multideal& I, CenterParams cp) {
  if (I.is_degenerate()) throw PreconditionError("is_prime needs a proper multideal");
  cp.check(alg.dim().value());
  for (Index x = 0; x < alg.size(); ++x) {
    if (I.contains(cp.i, x)) continue;
    for (Index y = 0; y < alg.size(); ++y)
      if (!I.contains(cp.i, y) && I.contains(cp.i, meet_i(alg, cp.i, x, y))) return false;
  }
  return true;
}

StoneEmbedding stone_embed(const TableAlgebra& alg, CenterParams cp) {
  const auto ultras = all_ultramultideals(alg, cp);
  StoneEmbedding se;
  se.points = ultras.size();
  std::vector<std::vector<Value>> homs;
  for (const auto& u : ultras) homs.push_back(ultra_to_hom(alg, u));
  se.image.resize(alg.size());
  for (Index x = 0; x < alg.size(); ++x) {
    std::vector<Value> v;
    for (const auto& h : homs) v.push_back(h[x]);
    se.image[x] = Element(std::move(v));
  }
  std::set<Element> distinct(se.image.begin(), se.image.end());
  se.injective = distinct.size() == alg.size();
  se.surjective = se.points > 0 &&
                  distinct.size() == saturating_pow(static_cast<std::uint64_t>(alg.dim().value()), se.points);
  se.preserves_q = se.points > 0;
  if (se.preserves_q) {
    const PowerAlgebra target(alg.dim(), se.points);
    std::vector<Index> args(static_cast<std::size_t>(alg.dim().value()) + 1);
    std::vector<Element> ys(args.size() - 1);
    const auto& q = alg.q_table();
    for (std::size_t row = 0; row < q.size() && se.preserves_q; ++row) {
      decode_row(row, alg.size(), args);
      for (std::size_t k = 1; k < args.size(); ++k) ys[k - 1] = se.image[args[k]];
      se.preserves_q = target.q(se.image[args[0]], ys) == se.image[q[row]];
    }
  }
  return se;
}

IdealFilter boolean_ideal_filter_view(const TableAlgebra& alg, const Multideal& I) {
  if (alg.dim().value() != 2) throw DimensionError("the ideal/filter view needs n = 2");
  if (I.is_degenerate()) throw PreconditionError("the degenerate multideal has no ideal/filter view");
  const Index zero = alg.constant(2), one = alg.constant(1);
  auto meet = [&](Index x, Index y) { return alg.q_args(std::vector<Index>{x, y, zero}); };
  auto join = [&](Index x, Index y) { return alg.q_args(std::vector<Index>{x, one, y}); };
  auto neg = [&](Index x) { return alg.q_args(std::vector<Index>{x, zero, one}); };
  IdealFilter view{I.component(2), I.component(1)};
  auto in = [](const std::vector<Index>& set, Index x) { return std::binary_search(set.begin(), set.end(), x); };
  auto fail = [&](const std::string& what) { throw PreconditionError("ideal/filter check failed: " + what); };

  if (!in(view.ideal, zero)) fail("0 ∉ I_2");
  if (in(view.ideal, one)) fail("1 ∈ I_2");
  for (Index x : view.ideal) {
    for (Index y : view.ideal)
      if (!in(view.ideal, join(x, y))) fail("I_2 not closed under ∨");
    for (Index y = 0; y < alg.size(); ++y)
      if (!in(view.ideal, meet(y, x)) || !in(view.ideal, meet(x, y))) fail("I_2 not downward closed");
  }
  if (!in(view.filter, one)) fail("1 ∉ I_1");
  for (Index x : view.filter) {
    for (Index y : view.filter)
      if (!in(view.filter, meet(x, y))) fail("I_1 not closed under ∧");
    for (Index y = 0; y < alg.size(); ++y)
      if (!in(view.filter, join(y, x)) || !in(view.filter, join(x, y))) fail("I_1 not upward closed");
  }
  std::vector<Index> negated;
  for (Index x : view.ideal) negated.push_back(neg(x));
  std::sort(negated.begin(), negated.end());
  if (negated != view.filter) fail("I_1 ≠ ¬I_2");
  return view;
}

}  // namespace nba
