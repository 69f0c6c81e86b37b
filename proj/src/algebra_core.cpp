#include "nba/algebra_core.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

namespace nba {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// IndexSet

IndexSet::IndexSet(std::initializer_list<int> ks) {
  for (int k : ks) {
    if (k < 1 || k > 32) throw SubscriptError("subscript " + std::to_string(k) + " out of range");
    insert(k);
  }
}

int IndexSet::min() const {
  if (mask_ == 0) throw SubscriptError("empty index set has no minimum");
  return std::countr_zero(mask_) + 1;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int k = 1; k <= 32; ++k)
    if (contains(k)) out.push_back(k);
  return out;
}

void IndexSet::check(int n) const {
  if (empty()) throw SubscriptError("index set must be nonempty");
  if ((mask_ & ~full(n).mask()) != 0)
    throw SubscriptError("index set has a subscript outside 1.." + std::to_string(n));
}

// Element

Element::Element(std::initializer_list<int> v) {
  values.reserve(v.size());
  for (int x : v) values.push_back(static_cast<Value>(x));
}

std::string to_string(const Element& e) {
  std::string s = "[";
  for (std::size_t p = 0; p < e.values.size(); ++p) {
    if (p) s += ',';
    s += std::to_string(static_cast<int>(e.values[p]));
  }
  return s + "]";
}

Element constant_element(Dim n, std::size_t points, int k) {
  if (k < 1 || k > n.value())
    throw SubscriptError("constant e" + std::to_string(k) + " outside 1.." + std::to_string(n.value()));
  return Element(std::vector<Value>(points, static_cast<Value>(k)));
}

// PowerAlgebra

PowerAlgebra::PowerAlgebra(Dim n, std::size_t points) : n_(n), points_(points) {
  if (saturating_pow(static_cast<std::uint64_t>(n.value()), points) > (1ull << 32))
    throw ShapeError("power algebra too large to index");
}

PowerAlgebra::PowerAlgebra(Dim n, std::size_t points, std::vector<Element> carrier)
    : n_(n), points_(points) {
  for (const auto& e : carrier) check_shape(e);
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  carrier_ = std::move(carrier);
  for (int k = 1; k <= n.value(); ++k)
    if (!std::binary_search(carrier_->begin(), carrier_->end(), constant(k)))
      throw ShapeError("carrier does not contain the constant e" + std::to_string(k));
  // closure under pointwise q
  const auto& c = *carrier_;
  const std::size_t s = c.size();
  const std::size_t arity = static_cast<std::size_t>(n.value()) + 1;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Element> ys(static_cast<std::size_t>(n.value()));
  for (;;) {
    for (std::size_t a = 1; a < arity; ++a) ys[a - 1] = c[idx[a]];
    if (!std::binary_search(c.begin(), c.end(), q(c[idx[0]], ys)))
      throw ShapeError("carrier is not closed under q");
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < s) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::size_t PowerAlgebra::size() const {
  if (carrier_) return carrier_->size();
  return static_cast<std::size_t>(saturating_pow(static_cast<std::uint64_t>(n_.value()), points_));
}

void PowerAlgebra::check_shape(const Element& e) const {
  if (e.points() != points_)
    throw ShapeError("element " + to_string(e) + " has " + std::to_string(e.points()) +
                     " points, expected " + std::to_string(points_));
  for (Value v : e.values)
    if (v < 1 || v > n_.value())
      throw ShapeError("element " + to_string(e) + " has a value outside 1.." +
                       std::to_string(n_.value()));
}

std::uint64_t PowerAlgebra::code(const Element& e) const {
  std::uint64_t c = 0;
  for (Value v : e.values) c = c * static_cast<std::uint64_t>(n_.value()) + (v - 1u);
  return c;
}

Element PowerAlgebra::element(Index i) const {
  if (carrier_) return carrier_->at(i);
  if (i >= size()) throw ShapeError("element index out of range");
  std::vector<Value> v(points_);
  std::uint64_t c = i;
  for (std::size_t p = points_; p-- > 0;) {
    v[p] = static_cast<Value>(c % static_cast<std::uint64_t>(n_.value()) + 1);
    c /= static_cast<std::uint64_t>(n_.value());
  }
  return Element(std::move(v));
}

std::vector<Element> PowerAlgebra::elements() const {
  if (carrier_) return *carrier_;
  std::vector<Element> out;
  out.reserve(size());
  for (Index i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

std::optional<Index> PowerAlgebra::index_of(const Element& e) const {
  if (e.points() != points_) return std::nullopt;
  for (Value v : e.values)
    if (v < 1 || v > n_.value()) return std::nullopt;
  if (!carrier_) return static_cast<Index>(code(e));
  auto it = std::lower_bound(carrier_->begin(), carrier_->end(), e);
  if (it == carrier_->end() || *it != e) return std::nullopt;
  return static_cast<Index>(it - carrier_->begin());
}

Element PowerAlgebra::q(const Element& x, std::span<const Element> ys) const {
  if (ys.size() != static_cast<std::size_t>(n_.value()))
    throw ArityError("q expects " + std::to_string(n_.value()) + " branches, got " +
                     std::to_string(ys.size()));
  if (x.points() != points_) throw ShapeError("scrutinee over a different point set");
  for (const auto& y : ys)
    if (y.points() != points_) throw ShapeError("branch over a different point set");
  std::vector<Value> out(points_);
  for (std::size_t p = 0; p < points_; ++p) {
    const Value sel = x.values[p];
    if (sel < 1 || sel > n_.value()) throw ShapeError("scrutinee value out of range");
    out[p] = ys[sel - 1u].values[p];
  }
  return Element(std::move(out));
}

TableAlgebra PowerAlgebra::tabulate() const {
  const auto elems = elements();
  const std::size_t s = elems.size();
  const std::size_t arity = static_cast<std::size_t>(n_.value()) + 1;
  const auto total = saturating_pow(s, arity);
  if (total > 50'000'000ull) throw ShapeError("q table of this algebra is too large to tabulate");

  std::vector<Index> table(static_cast<std::size_t>(total));
  std::vector<std::size_t> idx(arity, 0);
  std::vector<Element> ys(arity - 1);
  for (std::size_t off = 0; off < table.size(); ++off) {
    for (std::size_t a = 1; a < arity; ++a) ys[a - 1] = elems[idx[a]];
    table[off] = *index_of(q(elems[idx[0]], ys));
    for (std::size_t pos = arity; pos-- > 0;) {
      if (++idx[pos] < s) break;
      idx[pos] = 0;
    }
  }
  std::vector<Index> constants;
  for (int k = 1; k <= n_.value(); ++k) constants.push_back(*index_of(constant(k)));
  return TableAlgebra(n_, s, std::move(constants), std::move(table), elems);
}

// TableAlgebra

TableAlgebra::TableAlgebra(Dim n, std::size_t size, std::vector<Index> constants,
                           std::vector<Index> q_table, std::vector<Element> labels)
    : n_(n), size_(size), constants_(std::move(constants)), q_(std::move(q_table)),
      labels_(std::move(labels)) {
  if (size == 0) throw ShapeError("table algebra must be nonempty");
  if (constants_.size() != static_cast<std::size_t>(n.value()))
    throw ShapeError("expected " + std::to_string(n.value()) + " constants");
  for (Index c : constants_)
    if (c >= size) throw ShapeError("constant index out of range");
  const auto expected = saturating_pow(size, static_cast<std::uint64_t>(n.value()) + 1);
  if (q_.size() != expected)
    throw ShapeError("q table has length " + std::to_string(q_.size()) + ", expected " +
                     std::to_string(expected));
  for (Index v : q_)
    if (v >= size) throw ShapeError("q table entry out of range");
  if (!labels_.empty() && labels_.size() != size) throw ShapeError("label count mismatch");
}

std::size_t TableAlgebra::offset(std::span<const Index> args) const {
  std::size_t off = 0;
  for (Index a : args) off = off * size_ + a;
  return off;
}

Index TableAlgebra::q(Index x, std::span<const Index> ys) const {
  if (ys.size() != static_cast<std::size_t>(n_.value()))
    throw ArityError("q expects " + std::to_string(n_.value()) + " branches");
  std::size_t off = x;
  for (Index y : ys) off = off * size_ + y;
  return q_[off];
}

std::optional<Index> TableAlgebra::index_of(const Element& e) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), e);
  if (it == labels_.end() || *it != e) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

// NSubset

bool NSubset::is_partition() const {
  const std::size_t m = points();
  for (std::size_t p = 0; p < m; ++p) {
    int hits = 0;
    for (const auto& part : parts) hits += part[p] ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

Element NSubset::to_element() const {
  std::vector<Value> v(points());
  for (std::size_t p = 0; p < v.size(); ++p)
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k][p]) v[p] = static_cast<Value>(k + 1);
  return Element(std::move(v));
}

NSubset NSubset::from_element(Dim n, const Element& e) {
  NSubset s;
  s.parts.assign(static_cast<std::size_t>(n.value()), std::vector<bool>(e.points(), false));
  for (std::size_t p = 0; p < e.points(); ++p) s.parts.at(e.values[p] - 1u)[p] = true;
  return s;
}

// Operations

PowerAlgebra generator(Dim n) { return PowerAlgebra(n, 1); }

PowerAlgebra power_algebra(Dim n, std::size_t points) { return PowerAlgebra(n, points); }

Element q_eval(const PowerAlgebra& alg, const Element& x, std::span<const Element> ys) {
  Element r = alg.q(x, ys);
  if (!alg.is_full()) {
    if (!alg.contains(x)) throw ShapeError("scrutinee is not in the carrier");
    for (const auto& y : ys)
      if (!alg.contains(y)) throw ShapeError("branch is not in the carrier");
  }
  return r;
}

NSubset nsubset_q(Dim n, const NSubset& y0, std::span<const NSubset> ys) {
  const auto nn = static_cast<std::size_t>(n.value());
  if (ys.size() != nn) throw ArityError("nsubset_q expects n branches");
  if (y0.parts.size() != nn) throw ShapeError("scrutinee must have n parts");
  const std::size_t m = y0.points();
  for (const auto& y : ys) {
    if (y.parts.size() != nn) throw ShapeError("branch must have n parts");
    for (const auto& part : y.parts)
      if (part.size() != m) throw ShapeError("branch over a different point set");
  }
  for (const auto& part : y0.parts)
    if (part.size() != m) throw ShapeError("ragged scrutinee");

  // component k = union over i of (Y^0_i ∩ Y^i_k)
  NSubset out;
  out.parts.assign(nn, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < nn; ++k)
    for (std::size_t p = 0; p < m; ++p) {
      bool hit = false;
      for (std::size_t i = 0; i < nn && !hit; ++i) hit = y0.parts[i][p] && ys[i].parts[k][p];
      out.parts[k][p] = hit;
    }
  return out;
}

PowerAlgebra subalgebra_closure(const PowerAlgebra& alg, std::span<const Element> gens) {
  const int n = alg.dim().value();
  std::set<Element> closed;
  for (int k = 1; k <= n; ++k) closed.insert(alg.constant(k));
  for (const auto& g : gens) {
    if (!alg.contains(g)) throw ShapeError("generator " + to_string(g) + " is not in the algebra");
    closed.insert(g);
  }
  const std::size_t arity = static_cast<std::size_t>(n) + 1;
  std::vector<Element> ys(static_cast<std::size_t>(n));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Element> cur(closed.begin(), closed.end());
    std::vector<std::size_t> idx(arity, 0);
    for (bool done = false; !done;) {
      for (std::size_t a = 1; a < arity; ++a) ys[a - 1] = cur[idx[a]];
      if (closed.insert(alg.q(cur[idx[0]], ys)).second) grew = true;
      done = true;
      for (std::size_t pos = arity; pos-- > 0;) {
        if (++idx[pos] < cur.size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
    }
  }
  return PowerAlgebra(alg.dim(), alg.points(), std::vector<Element>(closed.begin(), closed.end()));
}

std::vector<Index> subalgebra_closure(const TableAlgebra& alg, std::span<const Index> gens) {
  const std::size_t s = alg.size();
  std::vector<bool> in(s, false);
  std::vector<Index> members;
  auto add = [&](Index x) {
    if (x >= s) throw ShapeError("generator index out of range");
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      return true;
    }
    return false;
  };
  for (Index c : alg.constants()) add(c);
  for (Index g : gens) add(g);
  const std::size_t arity = static_cast<std::size_t>(alg.dim().value()) + 1;
  std::vector<Index> args(arity);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Index> cur = members;
    std::vector<std::size_t> idx(arity, 0);
    for (bool done = false; !done;) {
      for (std::size_t a = 0; a < arity; ++a) args[a] = cur[idx[a]];
      if (add(alg.q_args(args))) grew = true;
      done = true;
      for (std::size_t pos = arity; pos-- > 0;) {
        if (++idx[pos] < cur.size()) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace nba
