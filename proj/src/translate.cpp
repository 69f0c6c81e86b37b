#include "nba/translate.hpp"

namespace nba {

namespace {

Term star_of_q(const Term& t, int n) {
  if (t.kind != Term::Kind::q) {
    Term r = t;
    for (auto& a : r.args) a = star_of_q(a, n);
    return r;
  }
  const Term x = star_of_q(t.args[0], n);
  std::vector<Term> ys;
  for (std::size_t k = 1; k < t.args.size(); ++k) ys.push_back(star_of_q(t.args[k], n));
  Term acc = ys[static_cast<std::size_t>(n - 1)];
  for (int k = n - 1; k >= 1; --k)
    acc = Term::t(IndexSet::singleton(k), x, std::move(acc), ys[static_cast<std::size_t>(k - 1)]);
  return acc;
}

Term skew_ternary(int i, Term x, Term y, Term z) {
  const IndexSet d = IndexSet::singleton(i);
  Term left = Term::bin(BinKind::meet, d, x, std::move(y));
  Term right = Term::bin(BinKind::minus, d, std::move(z), std::move(x));
  return Term::bin(BinKind::barvee, d, std::move(left), std::move(right));
}

Term to_skew(const Term& t, int n, int i) {
  const IndexSet di = IndexSet::singleton(i);
  auto fail = [&](const std::string& why) -> Term {
    throw PreconditionError("cannot express " + print_term(t) + " in the skew " + std::to_string(i) +
                            "-signature: " + why);
  };
  switch (t.kind) {
    case Term::Kind::var:
      return t;
    case Term::Kind::constant:
      if (t.index != i) return fail("only the constant e" + std::to_string(i) + " is available");
      return Term::constant(i, t.zero_spelling);
    case Term::Kind::q: {
      if (n != 2) return fail("q has n+1 arguments, only n = 2 has a ternary reading");
      // q(x, y_1, y_2) = t_i(x, y_{3-i}, y_i) for n = 2.
      const Term x = to_skew(t.args[0], n, i);
      const Term other = to_skew(t.args[static_cast<std::size_t>(3 - i)], n, i);
      const Term own = to_skew(t.args[static_cast<std::size_t>(i)], n, i);
      return skew_ternary(i, x, other, own);
    }
    case Term::Kind::t:
      if (t.subscript != di) return fail("subscript differs from {" + std::to_string(i) + "}");
      return skew_ternary(i, to_skew(t.args[0], n, i), to_skew(t.args[1], n, i), to_skew(t.args[2], n, i));
    case Term::Kind::bin: {
      if (t.subscript != di) return fail("subscript differs from {" + std::to_string(i) + "}");
      Term l = to_skew(t.args[0], n, i);
      Term r = to_skew(t.args[1], n, i);
      switch (t.op) {
        case BinKind::meet:
        case BinKind::barwedge:  // equal to meet for singleton subscripts
          return Term::bin(BinKind::meet, di, std::move(l), std::move(r));
        case BinKind::barvee:
          return Term::bin(BinKind::barvee, di, std::move(l), std::move(r));
        case BinKind::minus:
          return Term::bin(BinKind::minus, di, std::move(l), std::move(r));
        case BinKind::join:
          return fail("or needs a constant e_j with j ≠ i");
      }
    }
  }
  return fail("malformed term");
}

}  // namespace

Term translate_term(const Term& t, Dim n, Target target) {
  validate_term(t, n);
  switch (target.kind) {
    case Target::Kind::q:
      return elaborate(t, n);
    case Target::Kind::star:
      return star_of_q(elaborate(t, n), n.value());
    case Target::Kind::skew:
      if (target.i < 1 || target.i > n.value()) throw SubscriptError("skew index out of range");
      return to_skew(t, n.value(), target.i);
  }
  throw PreconditionError("unknown target");
}

}  // namespace nba
