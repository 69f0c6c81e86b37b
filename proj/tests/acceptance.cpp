// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nba/ideals_congruences.hpp"
#include "nba/representation.hpp"
#include "nba/skew_structure.hpp"
#include "nba/synthesis.hpp"
#include "nba/term.hpp"
#include "nba/transforms.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace nba;
using support::par;

namespace {

// Collects failed expectations for one criterion.
struct Probe {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
  std::size_t checks = 0;
  void count(std::size_t k = 1) { checks += k; }
};

std::vector<TableAlgebra> subalgebras32() {
  std::vector<TableAlgebra> out;
  for (const auto& carrier : oracle::subalgebras(power_algebra(3, 2)))
    out.push_back(PowerAlgebra(Dim(3), 2, carrier).tabulate());
  return out;
}

std::string name_of(const TableAlgebra& a) {
  return std::to_string(a.dim().value()) + "-dim algebra of size " + std::to_string(a.size());
}

// 1 ---------------------------------------------------------------------------
void axioms(Probe& p) {
  for (int n = 2; n <= 4; ++n) {
    const Dim d(n);
    CheckOptions opts;
    if (n == 4) opts.mode = CheckMode::sampled;
    for (const auto& law : support::nba_laws(n)) {
      const auto v = check_identity(parse_term(law.lhs, d), parse_term(law.rhs, d), d, opts);
      p.count(v.assignments_checked);
      const std::string tag = law.name + " at n=" + std::to_string(n);
      p.expect(v.valid, tag + " has a counterexample");
      if (n <= 3) {
        p.expect(v.mode == CheckMode::exhaustive, tag + " not exhaustive");
        p.expect(v.assignments_checked == saturating_pow(static_cast<std::uint64_t>(n), v.variables.size()),
                 tag + " skipped assignments");
      } else {
        p.expect(v.samples == 100'000 && v.seed == 0xA11CE, tag + " wrong sampling parameters");
      }
    }
  }
}

// 2 ---------------------------------------------------------------------------
void dictionary(Probe& p) {
  const auto g = generator(3).tabulate();
  for (int i = 1; i <= 3; ++i) {
    const auto sk = skew_reduct(g, i);
    const auto rc = right_church_reduct(g, i);
    const Index zero = g.constant(i);
    const std::string s = "S_" + std::to_string(i);
    for (Index x = 0; x < 3; ++x)
      for (Index y = 0; y < 3; ++y)
        for (Index z = 0; z < 3; ++z) {
          p.count(4);
          p.expect(rc.at(x, y, z) == sk.j(sk.m(x, y), sk.d(z, x)), s + ": q = (x∧y)∨(z\\x)");
          p.expect(sk.j(x, y) == rc.at(x, x, y), s + ": x∨y = q(x,x,y)");
          p.expect(sk.m(x, y) == rc.at(x, y, zero), s + ": x∧y = q(x,y,0)");
          p.expect(sk.d(y, x) == rc.at(x, zero, y), s + ": y\\x = q(x,0,y)");
        }
  }
}

// 3 ---------------------------------------------------------------------------
void star_round_trips(Probe& p) {
  for (int n = 2; n <= 3; ++n)
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto a = par(n, m);
      const auto star = to_star(a);
      const auto back = from_star(star);
      const std::string tag = "n=" + std::to_string(n) + " |I|=" + std::to_string(m);
      p.count(a.q_table().size());
      p.expect(back.q_table() == a.q_table() && back.constants() == a.constants(), tag + ": (A*)• ≠ A");
      p.expect(to_star(back) == star, tag + ": (B•)* ≠ B");
    }
}

// 4 ---------------------------------------------------------------------------
void skew_audits(Probe& p) {
  const auto a = par(3, 2);
  const auto sk = skew_reduct(a, 1);
  for (Suite s : {Suite::skew_lattice, Suite::skew_ba, Suite::right_handed}) {
    const auto r = check_axioms(sk, s);
    for (const auto& ax : r.axioms) {
      p.count(ax.checked);
      p.expect(ax.ok, std::string(suite_name(s)) + " " + ax.name + " fails");
      p.expect(ax.mode == CheckMode::exhaustive, std::string(suite_name(s)) + " " + ax.name + " sampled");
    }
  }
  for (const char* name : {"S1-normality", "S1-distrib-left", "S1-distrib-right"})
    p.expect(check_axioms(sk, Suite::skew_ba).find(name) != nullptr, std::string(name) + " missing from SKEW_BA");
  const auto rel = relations(sk);
  p.expect(sk.zero == a.constant(1), "zero is not e1");
  for (Index x = 0; x < a.size(); ++x) p.expect(rel.le[a.constant(1)][x], "e1 is not the bottom");
  for (int k = 2; k <= 3; ++k)
    for (Index y = 0; y < a.size(); ++y)
      if (y != a.constant(k)) p.expect(!rel.le[a.constant(k)][y], "e" + std::to_string(k) + " is not maximal");
}

// 5 ---------------------------------------------------------------------------
void transpositions(Probe& p) {
  const auto a = par(3, 2);
  for (int r = 1; r <= 3; ++r)
    for (int k = r + 1; k <= 3; ++k) {
      const auto sr = skew_reduct(a, r), sk = skew_reduct(a, k);
      const auto rk = Permutation::transposition(3, r, k);
      std::vector<Index> f(a.size());
      std::set<Index> image;
      for (Index x = 0; x < a.size(); ++x) image.insert(f[x] = perm_apply(a, x, rk));
      const std::string tag = "(" + std::to_string(r) + std::to_string(k) + ")";
      p.expect(image.size() == a.size(), tag + " not bijective");
      std::size_t pairs = 0;
      for (Index x = 0; x < a.size(); ++x)
        for (Index y = 0; y < a.size(); ++y, ++pairs) {
          p.expect(f[sr.m(x, y)] == sk.m(f[x], f[y]), tag + " breaks ∧");
          p.expect(f[sr.j(x, y)] == sk.j(f[x], f[y]), tag + " breaks ∨");
          p.expect(f[sr.d(x, y)] == sk.d(f[x], f[y]), tag + " breaks \\");
        }
      p.expect(pairs == 81, tag + " did not see 81 pairs");
      p.count(3 * pairs);
    }
}

// 6 ---------------------------------------------------------------------------
void coordinate_laws(Probe& p) {
  const auto a = par(3, 2);
  const int n = 3;
  const CenterParams cp{1, 2};
  const int i = cp.i, j = cp.j;
  const Index ei = a.constant(i), ej = a.constant(j);
  auto m = [&](Index x, Index y) { return meet_i(a, i, x, y); };
  auto v = [&](Index x, Index y) { return join_i(a, i, x, y); };
  auto co = [&](Index x) { return coordinates(a, x, cp); };
  auto at = [](const std::vector<Index>& c, int k) { return c[static_cast<std::size_t>(k - 1)]; };
  const auto bc = boolean_center(a, cp);

  std::set<Index> some_coordinate;
  for (Index y = 0; y < a.size(); ++y)
    for (Index c : co(y)) some_coordinate.insert(c);

  for (Index x = 0; x < a.size(); ++x) {
    const auto cx = co(x);
    // (i)
    for (int k = 1; k <= n; ++k)
      for (int r = 1; r <= n; ++r)
        if (k != r) p.expect(m(at(cx, k), at(cx, r)) == ei, "lem(i)");
    // (ii)
    p.expect(v(v(at(cx, 1), at(cx, 2)), at(cx, 3)) == ej, "lem(ii)");
    // (iii)
    for (Index y1 = 0; y1 < a.size(); ++y1)
      for (Index y2 = 0; y2 < a.size(); ++y2)
        for (Index y3 = 0; y3 < a.size(); ++y3) {
          const std::vector<Index> ys{y1, y2, y3};
          const auto cq = co(a.q(x, ys));
          const auto c1 = co(y1), c2 = co(y2), c3 = co(y3);
          for (int k = 1; k <= n; ++k) {
            const std::vector<Index> yk{at(c1, k), at(c2, k), at(c3, k)};
            p.expect(at(cq, k) == a.q(x, yk), "lem(iii) first equality");
            p.expect(at(cq, k) == v(v(m(at(cx, 1), at(c1, k)), m(at(cx, 2), at(c2, k))), m(at(cx, 3), at(c3, k))),
                     "lem(iii) second equality");
          }
          p.count(2 * n);
        }
    // (iv)
    for (Index y = 0; y < a.size(); ++y) {
      const auto cy = co(y);
      const auto cxy = co(m(x, y));
      for (int k = 1; k <= n; ++k)
        if (k != i) p.expect(at(cxy, k) == m(x, at(cy, k)), "lem(iv)");
    }
    // (v), (vi)
    for (int k = 1; k <= n; ++k)
      if (k != i) p.expect(m(at(cx, k), x) == m(at(cx, k), a.constant(k)), "lem(v)");
    p.expect(m(at(cx, i), x) == ei, "lem(vi)");
    // (vii)
    if (bc.contains(x))
      for (int k = 1; k <= n; ++k) {
        const Index want = k == i ? boolean_negation(a, cp, x) : k == j ? x : ei;
        p.expect(at(cx, k) == want, "lem(vii)");
      }

    // Six characterizations of Boolean elements.
    const bool ca = m(x, ej) == x && m(ej, x) == x;
    const bool cb = m(x, ej) == x;
    const bool cc = some_coordinate.count(x) > 0;
    const bool cd = at(cx, j) == x;
    bool ce = true;
    for (int k = 1; k <= n; ++k)
      if (k != i && k != j) ce = ce && at(cx, k) == ei;
    const bool cf = at(co(at(cx, i)), i) == x;
    p.expect(ca == cb && cb == cc && cc == cd && cd == ce && ce == cf, "Boolean characterizations disagree");
    p.expect(ca == bc.contains(x), "Boolean center membership disagrees");

    // Reconstruction under every order and bracketing.
    for (const auto& shape : SumShape::all(3)) {
      p.expect(reconstruct<TableAlgebra>(a, cx, i, shape) == x, "reconstruction fails");
      p.count();
    }
    p.count(20);
  }
}

// 7 ---------------------------------------------------------------------------
void congruence_bijection(Probe& p) {
  const auto a32 = par(3, 2), a23 = par(2, 3);
  p.expect(all_congruences(a32).size() == 4, "3^2 does not have 4 congruences");
  p.expect(all_congruences(a23).size() == 8, "2^3 does not have 8 congruences");
  for (const auto* a : {&a32, &a23}) {
    std::set<std::vector<Index>> got;
    for (const auto& c : all_congruences(*a)) got.insert(c.labels());
    p.expect(got == oracle::congruences(*a), name_of(*a) + ": congruences differ from brute force");
  }
  std::vector<TableAlgebra> algs = subalgebras32();
  algs.push_back(a23);
  for (const auto& a : algs) {
    for (const auto& c : all_congruences(a)) {
      if (c.is_total()) continue;
      p.count();
      p.expect(theta_of(a, multideal_of(a, c)) == c, name_of(a) + ": θ(I(φ)) ≠ φ");
    }
    for (const auto& h : all_multideals(a)) {
      p.count();
      p.expect(multideal_of(a, theta_of(a, h)) == h, name_of(a) + ": I(θ(H)) ≠ H");
    }
  }
}

// 8 ---------------------------------------------------------------------------
void ultramultideals(Probe& p) {
  const std::vector<std::pair<int, std::size_t>> cases{{2, 3}, {3, 2}, {3, 3}, {4, 2}};
  for (const auto& [n, m] : cases) {
    const auto a = par(n, m);
    const std::string tag = std::to_string(n) + "^" + std::to_string(m);
    const auto us = all_ultramultideals(a);
    p.expect(us.size() == m, tag + ": ultramultideal count");
    std::set<std::vector<Value>> homs;
    for (const auto& u : us) {
      const auto h = ultra_to_hom(a, u);
      std::set<Value> values(h.begin(), h.end());
      p.expect(is_homomorphism_onto_generator(a, h), tag + ": not a homomorphism");
      p.expect(values.size() == static_cast<std::size_t>(n), tag + ": not surjective");
      p.expect(hom_to_ultra(a, h) == u, tag + ": hom to ultra round trip");
      homs.insert(h);
      p.count();
    }
    p.expect(homs.size() == us.size(), tag + ": two ultramultideals share a homomorphism");
    p.expect(homs == oracle::homomorphisms(a), tag + ": homomorphisms differ from brute force");
  }
  const auto a = par(3, 2);
  for (const auto& h : all_multideals(a)) {
    p.expect(is_prime(a, h) == h.is_ultra(a.size()), "3^2: prime and ultra disagree");
    const auto atoms = admissible_atoms(a, h, {1, 2});
    p.expect(!atoms.empty(), "3^2: multideal without admissible atom");
    for (Index atom : atoms) {
      const auto u = extend_to_ultra(a, h, {1, 2}, atom);
      bool ext = u.is_ultra(a.size());
      for (int k = 1; k <= 3; ++k)
        for (Index x : h.component(k)) ext = ext && u.contains(k, x);
      p.expect(ext, "3^2: extension is not an ultramultideal above the multideal");
    }
    p.count();
  }
}

// 9 ---------------------------------------------------------------------------
void stone(Probe& p) {
  for (const auto& a : subalgebras32()) {
    const auto se = stone_embed(a);
    p.expect(se.injective && se.preserves_q, name_of(a) + ": not an embedding");
    p.count();
  }
  for (const auto& a : {par(3, 2), par(2, 3)}) {
    const auto se = stone_embed(a);
    p.expect(se.injective && se.preserves_q && se.surjective, name_of(a) + ": not an isomorphism");
    p.count();
  }
}

// 10 --------------------------------------------------------------------------
void synthesis(Probe& p) {
  const Dim n(3);
  for (int k = 1; k <= 2; ++k) {
    const std::uint64_t rows = saturating_pow(3, static_cast<std::uint64_t>(k));
    const std::uint64_t tables = saturating_pow(3, rows);
    for (std::uint64_t c = 0; c < tables; ++c) {
      TruthTable t;
      t.n = 3;
      t.k = k;
      std::uint64_t r = c;
      t.entries.assign(rows, 1);
      for (std::uint64_t e = rows; e-- > 0;) {
        t.entries[e] = static_cast<Value>(r % 3 + 1);
        r /= 3;
      }
      const Term s = synth(t);
      const Term simple = simplify(s, n).first;
      p.expect(verify_term(s, t), "synthesized term fails its table");
      p.expect(verify_term(simple, t), "simplified term fails its table");
      p.expect(check_identity(s, simple, n).valid, "simplify changed the meaning of a term");
      p.count(3);
    }
  }
  auto proj = [&](int k, int which) {
    TruthTable t;
    t.n = 3;
    t.k = k;
    for (int a = 1; a <= 3; ++a)
      if (k == 1)
        t.entries.push_back(static_cast<Value>(a));
      else
        for (int b = 1; b <= 3; ++b) t.entries.push_back(static_cast<Value>(which == 1 ? a : b));
    return print_term(simplify(synth(t), n).first);
  };
  p.expect(proj(1, 1) == "x1", "unary identity does not simplify to x1");
  p.expect(proj(2, 1) == "x1", "first projection does not simplify to x1");
  p.expect(proj(2, 2) == "x2", "second projection does not simplify to x2");
}

// 11 --------------------------------------------------------------------------
void representation(Probe& p) {
  const auto r = verify_embedding(2, Dim(3), 3);
  p.expect(r.ok(), "X={a,b}, n=3, i=3: " + r.first_failure.value_or("embedding fails"));
  p.expect(r.pairs_checked == 81, "X={a,b}: pairs checked ≠ 81");
  const auto r4 = verify_embedding(1, Dim(4), 4);
  p.expect(r4.ok(), "X={a}, n=4, i=4: " + r4.first_failure.value_or("embedding fails"));
  p.count(r.pairs_checked + r4.pairs_checked);
}

// 12 --------------------------------------------------------------------------
void boolean_view(Probe& p) {
  const auto a = par(2, 3);
  const Index one = a.constant(1), zero = a.constant(2);
  auto meet = [&](Index x, Index y) { return a.q(x, std::vector<Index>{y, zero}); };
  auto join = [&](Index x, Index y) { return a.q(x, std::vector<Index>{one, y}); };
  auto neg = [&](Index x) { return a.q(x, std::vector<Index>{zero, one}); };
  for (const auto& h : all_multideals(a)) {
    IdealFilter v;
    try {
      v = boolean_ideal_filter_view(a, h);
    } catch (const Error& e) {
      p.expect(false, std::string("view refused: ") + e.what());
      continue;
    }
    const std::set<Index> ideal(v.ideal.begin(), v.ideal.end());
    p.expect(v.ideal == h.component(2), "ideal is not I_2");
    p.expect(ideal.count(zero) == 1, "0 not in ideal");
    p.expect(ideal.count(one) == 0, "1 in ideal");
    for (Index x : ideal) {
      for (Index y : ideal) p.expect(ideal.count(join(x, y)) == 1, "ideal not closed under join");
      for (Index y = 0; y < a.size(); ++y) p.expect(ideal.count(meet(x, y)) == 1, "ideal not a down-set");
    }
    std::vector<Index> negated;
    for (Index x : v.ideal) negated.push_back(neg(x));
    std::sort(negated.begin(), negated.end());
    p.expect(negated == h.component(1), "I_1 ≠ ¬I_2");
    p.count();
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Probe&)>>> criteria{
      {"axioms B0-B4 exhaustive at n=2,3 and sampled at n=4", axioms},
      {"skew/SRCA dictionary in S_i(3)", dictionary},
      {"skew star round trips", star_round_trips},
      {"skew reduct audits of 3^2", skew_audits},
      {"transposition isomorphisms", transpositions},
      {"coordinate laws and reconstruction", coordinate_laws},
      {"congruence counts and bijection", congruence_bijection},
      {"ultramultideals", ultramultideals},
      {"Stone embedding", stone},
      {"synthesis of all unary and binary tables", synthesis},
      {"partial function representation", representation},
      {"ideal/filter view in dimension 2", boolean_view},
  };
  int failed = 0;
  int number = 0;
  for (const auto& [title, run] : criteria) {
    ++number;
    Probe p;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(p);
    } catch (const std::exception& e) {
      p.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = p.failed == 0;
    failed += ok ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << number << "] " << title << " (" << p.checks << " checks, "
              << timing << ")\n";
    for (const auto& f : p.failures) std::cout << "     " << f << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
