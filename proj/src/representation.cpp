#include "nba/representation.hpp"

#include <set>

#include "nba/transforms.hpp"

namespace nba {

std::string to_string(const PartialFn& f) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = 0; p < f.points(); ++p) {
    if (!f.defined(p)) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(p) + "->" + std::to_string(f.values[p]);
  }
  return out + "}";
}

Index PartialFnAlgebra::index_of(const PartialFn& f) const {
  if (f.points() != points) throw ShapeError("partial function over the wrong point set");
  Index code = 0;
  for (Value v : f.values) {
    if (v > 2) throw ShapeError("partial function values must be 1 or 2");
    code = code * 3 + v;
  }
  return code;
}

PartialFnAlgebra partial_fn_algebra(std::size_t points) {
  if (points > 5) throw PreconditionError("partial_fn_algebra supports at most 5 points");
  PartialFnAlgebra pa;
  pa.points = points;
  const std::size_t s = static_cast<std::size_t>(saturating_pow(3, points));
  for (std::size_t code = 0; code < s; ++code) {
    PartialFn f;
    f.values.resize(points);
    std::size_t c = code;
    for (std::size_t p = points; p-- > 0;) {
      f.values[p] = static_cast<Value>(c % 3);
      c /= 3;
    }
    pa.elements.push_back(std::move(f));
  }
  auto pointwise = [&](auto&& op, std::initializer_list<Index> args) {
    PartialFn r;
    r.values.resize(points);
    std::vector<const PartialFn*> fs;
    for (Index a : args) fs.push_back(&pa.elements[a]);
    for (std::size_t p = 0; p < points; ++p) r.values[p] = op(fs, p);
    return pa.index_of(r);
  };
  auto meet = [](const std::vector<const PartialFn*>& f, std::size_t p) -> Value {
    return f[0]->defined(p) ? f[1]->values[p] : 0;
  };
  auto join = [](const std::vector<const PartialFn*>& f, std::size_t p) -> Value {
    return f[0]->defined(p) ? f[0]->values[p] : f[1]->values[p];
  };
  auto minus = [](const std::vector<const PartialFn*>& f, std::size_t p) -> Value {
    return f[1]->defined(p) ? 0 : f[0]->values[p];
  };
  auto ternary = [](const std::vector<const PartialFn*>& f, std::size_t p) -> Value {
    return f[0]->defined(p) ? f[1]->values[p] : f[2]->values[p];
  };

  pa.skew.size = s;
  pa.skew.zero = 0;
  pa.skew.meet.resize(s * s);
  pa.skew.join.resize(s * s);
  pa.skew.minus.resize(s * s);
  for (Index a = 0; a < s; ++a)
    for (Index b = 0; b < s; ++b) {
      pa.skew.meet[a * s + b] = pointwise(meet, {a, b});
      pa.skew.join[a * s + b] = pointwise(join, {a, b});
      pa.skew.minus[a * s + b] = pointwise(minus, {a, b});
    }
  pa.srca.size = s;
  pa.srca.zero = 0;
  pa.srca.t.resize(s * s * s);
  for (Index a = 0; a < s; ++a)
    for (Index b = 0; b < s; ++b)
      for (Index c = 0; c < s; ++c) pa.srca.t[(a * s + b) * s + c] = pointwise(ternary, {a, b, c});
  return pa;
}

Element star_embed(const PartialFn& f, Dim n, int i) {
  if (n.value() < 3) throw PreconditionError("star_embed needs n ≥ 3");
  if (i == 1 || i == 2 || i < 1 || i > n.value()) throw PreconditionError("star_embed needs i ∈ 3..n");
  Element e;
  e.values.resize(f.points());
  for (std::size_t p = 0; p < f.points(); ++p) {
    if (f.values[p] > 2) throw ShapeError("partial function values must be 1 or 2");
    e.values[p] = f.defined(p) ? f.values[p] : static_cast<Value>(i);
  }
  return e;
}

EmbeddingReport verify_embedding(std::size_t points, Dim n, int i) {
  const PartialFnAlgebra pa = partial_fn_algebra(points);
  const PowerAlgebra target(n, points);
  std::vector<Element> img;
  for (const auto& f : pa.elements) img.push_back(star_embed(f, n, i));

  EmbeddingReport rep;
  rep.injective = std::set<Element>(img.begin(), img.end()).size() == img.size();
  if (!rep.injective) rep.first_failure = "star map is not injective";
  rep.preserves_meet = rep.preserves_join = rep.preserves_minus = true;
  const std::size_t s = pa.elements.size();
  auto note = [&](const char* op, Index a, Index b) {
    if (!rep.first_failure)
      rep.first_failure = std::string(op) + " fails at (" + to_string(pa.elements[a]) + ", " +
                          to_string(pa.elements[b]) + ")";
  };
  for (Index a = 0; a < s; ++a)
    for (Index b = 0; b < s; ++b) {
      ++rep.pairs_checked;
      if (img[pa.skew.m(a, b)] != meet_i(target, i, img[a], img[b])) {
        rep.preserves_meet = false;
        note("meet", a, b);
      }
      if (img[pa.skew.j(a, b)] != join_i(target, i, img[a], img[b])) {
        rep.preserves_join = false;
        note("join", a, b);
      }
      if (img[pa.skew.d(a, b)] != minus_i(target, i, img[a], img[b])) {
        rep.preserves_minus = false;
        note("minus", a, b);
      }
    }
  return rep;
}

}  // namespace nba
