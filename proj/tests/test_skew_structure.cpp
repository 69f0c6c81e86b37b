#include <doctest.h>

#include <set>

#include "nba/skew_structure.hpp"
#include "nba/transforms.hpp"
#include "support.hpp"

using namespace nba;
using support::idx;
using support::par;

namespace {

bool holds_again(const std::vector<Identity>& ids, const AxiomOutcome& out) {
  for (const auto& id : ids)
    if (id.name == out.name) {
      std::vector<Index> vals;
      for (const auto& [name, v] : out.counterexample) vals.push_back(v);
      return id.holds(vals);
    }
  FAIL("identity not found: " << out.name);
  return true;
}

bool is_partial_order(const RelationBundle::Matrix& m) {
  const std::size_t s = m.size();
  for (std::size_t a = 0; a < s; ++a) {
    if (!m[a][a]) return false;
    for (std::size_t b = 0; b < s; ++b) {
      if (a != b && m[a][b] && m[b][a]) return false;
      for (std::size_t c = 0; c < s; ++c)
        if (m[a][b] && m[b][c] && !m[a][c]) return false;
    }
  }
  return true;
}

bool is_preorder(const RelationBundle::Matrix& m) {
  const std::size_t s = m.size();
  for (std::size_t a = 0; a < s; ++a) {
    if (!m[a][a]) return false;
    for (std::size_t b = 0; b < s; ++b)
      for (std::size_t c = 0; c < s; ++c)
        if (m[a][b] && m[b][c] && !m[a][c]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("NBA audit") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = check_axioms(generator(n).tabulate(), Suite::nba);
    CHECK(r.ok());
    CHECK_FALSE(r.sampled());
  }
  const auto r = check_axioms(par(3, 2), Suite::nba);
  CHECK(r.ok());
  CHECK(r.find("B3")->mode == CheckMode::sampled);
  CHECK(r.seed == 0xA11CE);
}

TEST_CASE("a corrupted q entry fails NBA with a genuine witness") {
  auto alg = par(3, 2);
  const std::vector<Index> args{idx(alg, Element{1, 2}), idx(alg, Element{3, 3}), idx(alg, Element{1, 1}),
                                idx(alg, Element{2, 2})};
  auto& tab = alg.mutable_q_table();
  const std::size_t off = alg.offset(args);
  tab[off] = (tab[off] + 1) % static_cast<Index>(alg.size());
  AuditOptions opts;
  opts.budget = 100'000'000;
  const auto r = check_axioms(alg, Suite::nba, opts);
  REQUIRE_FALSE(r.ok());
  const auto* f = r.first_failure();
  REQUIRE(f != nullptr);
  CHECK_FALSE(holds_again(nba_identities(alg), *f));
}

TEST_CASE("skew reducts are right-handed skew BAs") {
  for (const auto& alg : {generator(3).tabulate(), par(3, 2), par(2, 3), par(4, 1)}) {
    for (int i = 1; i <= alg.dim().value(); ++i) {
      const auto sk = skew_reduct(alg, i);
      CHECK(sk.zero == alg.constant(i));
      CHECK(check_axioms(sk, Suite::skew_lattice).ok());
      CHECK(check_axioms(sk, Suite::skew_ba).ok());
      CHECK(check_axioms(sk, Suite::right_handed).ok());
      for (Index x = 0; x < alg.size(); ++x)
        for (Index y = 0; y < alg.size(); ++y) CHECK(sk.m(x, y) == meet_i(alg, i, x, y));
    }
  }
}

TEST_CASE("relations in S_1(3)") {
  const auto g = generator(3).tabulate();
  const auto rel = relations(skew_reduct(g, 1));
  const Index e1 = g.constant(1), e2 = g.constant(2), e3 = g.constant(3);
  CHECK(rel.D[e2][e3]);
  CHECK_FALSE(rel.le[e2][e3]);
  for (Index x = 0; x < 3; ++x) CHECK(rel.le[e1][x]);
  for (Index m : {e2, e3})
    for (Index y = 0; y < 3; ++y)
      if (y != m) CHECK_FALSE(rel.le[m][y]);
  CHECK(rel.right_handed);
}

TEST_CASE("relations are orders and congruences") {
  for (const auto& alg : {par(3, 2), par(2, 3)}) {
    for (int i = 1; i <= alg.dim().value(); ++i) {
      const auto sk = skew_reduct(alg, i);
      const auto rel = relations(sk);
      CHECK(is_partial_order(rel.le));
      CHECK(is_preorder(rel.pre));
      CHECK(is_preorder(rel.pre_l));
      CHECK(is_preorder(rel.pre_r));
      CHECK(rel.right_handed);
      CHECK(rel.R == rel.D);
      for (Index x = 0; x < sk.size; ++x) CHECK(rel.le[sk.zero][x]);
      // D respects both lattice operations.
      for (Index a = 0; a < sk.size; ++a)
        for (Index b = 0; b < sk.size; ++b) {
          if (!rel.D[a][b]) continue;
          for (Index c = 0; c < sk.size; ++c) {
            CHECK(rel.D[sk.m(a, c)][sk.m(b, c)]);
            CHECK(rel.D[sk.m(c, a)][sk.m(c, b)]);
            CHECK(rel.D[sk.j(a, c)][sk.j(b, c)]);
            CHECK(rel.D[sk.j(c, a)][sk.j(c, b)]);
          }
        }
      const auto dcong = equivalence_of(rel.D);
      CHECK(dcong.size() == sk.size);
    }
  }
}

TEST_CASE("relations refuse a non-skew-lattice") {
  auto sk = skew_reduct(par(3, 1), 1);
  sk.meet[0] = 2;
  sk.meet[1] = 0;
  CHECK_THROWS_AS(relations(sk), PreconditionError);
}

TEST_CASE("right Church reducts are SRCAs") {
  for (const auto& alg : {par(3, 2), par(2, 3)})
    for (int i = 1; i <= alg.dim().value(); ++i) CHECK(check_axioms(right_church_reduct(alg, i), Suite::srca).ok());
  const auto ch = church_reduct(par(3, 2), IndexSet{1, 2}, 1, 3);
  CHECK(ch.one.value() == par(3, 2).constant(3));
  CHECK_THROWS_AS(church_reduct(par(3, 2), IndexSet{1, 2}, 1, 2), PreconditionError);
  CHECK_THROWS_AS(church_reduct(par(3, 2), IndexSet{1, 2}, 3, 1), PreconditionError);
}

TEST_CASE("skew star round trips") {
  for (int n = 2; n <= 3; ++n)
    for (std::size_t m = 1; m <= 2; ++m) {
      const auto a = par(n, m);
      const auto star = to_star(a);
      CHECK(check_axioms(star, Suite::skew_star).ok());
      const auto back = from_star(star);
      CHECK(back.q_table() == a.q_table());
      CHECK(back.constants() == a.constants());
      CHECK(to_star(back) == star);
    }
}

TEST_CASE("a corrupted star table fails N0-N5") {
  auto star = to_star(par(3, 1));
  star.t[0][(1 * star.size + 0) * star.size + 2] = 1;
  const auto r = check_axioms(star, Suite::skew_star);
  CHECK_FALSE(r.ok());
}

TEST_CASE("element kinds") {
  const auto alg = par(3, 2);
  for (Index e = 0; e < alg.size(); ++e) {
    CHECK(is_element_kind(alg, e, ElementKind::central));
    CHECK(is_element_kind(alg, e, ElementKind::factor));
    for (int i = 1; i <= 3; ++i) CHECK(is_element_kind(alg, e, ElementKind::semicentral, i));
  }
  auto bad = alg;
  const Index e = idx(alg, Element{1, 2});
  const std::vector<Index> args{e, idx(alg, Element{1, 1}), idx(alg, Element{2, 2}), idx(alg, Element{3, 3})};
  auto& tab = bad.mutable_q_table();
  tab[bad.offset(args)] = idx(alg, Element{3, 3});
  CHECK_FALSE(is_element_kind(bad, e, ElementKind::factor));
  CHECK_FALSE(is_element_kind(bad, e, ElementKind::central));
}

TEST_CASE("Boolean center") {
  const auto g = generator(3).tabulate();
  const auto b = boolean_center(g, {1, 2});
  CHECK(b.carrier == std::vector<Index>{g.constant(1), g.constant(2)});
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto a = par(3, m);
    const auto bc = boolean_center(a, {1, 2});
    CHECK(bc.size() == (std::size_t{1} << m));
    CHECK(bc.atoms.size() == m);
    CHECK(audit_boolean(bc).ok());
    for (Index x = 0; x < a.size(); ++x) {
      bool in = true;
      for (Value v : a.label(x).values) in = in && (v == 1 || v == 2);
      CHECK(bc.contains(x) == in);
    }
  }
  CHECK(audit_boolean(boolean_center(par(4, 2), {3, 1})).ok());
}

TEST_CASE("six characterizations of Boolean elements agree") {
  const auto alg = par(3, 2);
  const CenterParams cp{1, 2};
  const auto bc = boolean_center(alg, cp);
  std::set<Index> some_coordinate;
  for (Index y = 0; y < alg.size(); ++y)
    for (Index c : coordinates(alg, y, cp)) some_coordinate.insert(c);
  for (Index x = 0; x < alg.size(); ++x) {
    const auto cx = coordinates(alg, x, cp);
    const Index ej = alg.constant(cp.j), ei = alg.constant(cp.i);
    const bool a = meet_i(alg, cp.i, x, ej) == x && meet_i(alg, cp.i, ej, x) == x;
    const bool b = meet_i(alg, cp.i, x, ej) == x;
    const bool c = some_coordinate.count(x) > 0;
    const bool d = cx[static_cast<std::size_t>(cp.j - 1)] == x;
    const bool e = cx[2] == ei;
    const bool f = coordinates(alg, cx[static_cast<std::size_t>(cp.i - 1)], cp)[static_cast<std::size_t>(cp.i - 1)] == x;
    CHECK(a == b);
    CHECK(b == c);
    CHECK(c == d);
    CHECK(d == e);
    CHECK(e == f);
    CHECK(bc.contains(x) == a);
  }
}

TEST_CASE("central retract") {
  const auto alg = par(3, 2);
  const IndexSet d{1};
  for (Index x = 0; x < alg.size(); ++x) {
    const Index c = central_retract(alg, d, 1, 2, x);
    CHECK(central_retract(alg, d, 1, 2, c) == c);
  }
  CHECK(central_retract(alg, d, 1, 2, alg.constant(1)) == alg.constant(1));
  CHECK(central_retract(alg, d, 1, 2, alg.constant(2)) == alg.constant(2));
  const auto g = generator(3).tabulate();
  for (std::uint32_t mask = 1; mask < 7; ++mask) {
    const IndexSet dd = IndexSet::from_mask(mask);
    const int i = dd.min(), j = dd.complement(3).min();
    auto c = [&](Index x) { return central_retract(g, dd, i, j, x); };
    for (Index x = 0; x < 3; ++x)
      for (Index y = 0; y < 3; ++y)
        for (Index z = 0; z < 3; ++z) CHECK(c(t_eval(g, dd, x, y, z)) == t_eval(g, dd, c(x), c(y), c(z)));
  }
  CHECK_THROWS_AS(central_retract(alg, d, 2, 1, alg.constant(1)), PreconditionError);
}

TEST_CASE("factor congruences") {
  const auto alg = par(3, 2);
  const auto [phi, phibar] = factor_congruences_of(alg, idx(alg, Element{1, 1}), 1);
  CHECK(phi.is_diagonal());
  CHECK(phibar.is_total());

  const auto [p12, q12] = factor_congruences_of(alg, idx(alg, Element{1, 2}), 1);
  CHECK(p12.block_count() == 3);
  for (Index x = 0; x < alg.size(); ++x)
    for (Index y = 0; y < alg.size(); ++y) CHECK(p12.related(x, y) == (alg.label(x)[0] == alg.label(y)[0]));

  for (Index e = 0; e < alg.size(); ++e)
    for (int i = 1; i <= 3; ++i) {
      const auto [a, b] = factor_congruences_of(alg, e, i);
      CHECK(a.meet(b).is_diagonal());
      // Composition is total: every pair is linked through some z.
      for (Index x = 0; x < alg.size(); ++x)
        for (Index y = 0; y < alg.size(); ++y) {
          bool linked = false;
          for (Index z = 0; z < alg.size() && !linked; ++z) linked = a.related(x, z) && b.related(z, y);
          CHECK(linked);
        }
    }
}
