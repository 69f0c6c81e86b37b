#include "nba/congruence.hpp"

#include <numeric>

namespace nba {

Congruence Congruence::from_labels(const std::vector<Index>& labels) {
  Congruence c;
  c.block_.resize(labels.size());
  std::vector<std::pair<Index, Index>> seen;  // raw label -> canonical label
  for (std::size_t a = 0; a < labels.size(); ++a) {
    Index canon = static_cast<Index>(seen.size());
    for (const auto& [raw, id] : seen)
      if (raw == labels[a]) {
        canon = id;
        break;
      }
    if (canon == seen.size()) seen.emplace_back(labels[a], canon);
    c.block_[a] = canon;
  }
  c.blocks_ = seen.size();
  return c;
}

Congruence Congruence::diagonal(std::size_t size) {
  std::vector<Index> l(size);
  std::iota(l.begin(), l.end(), Index{0});
  return from_labels(l);
}

Congruence Congruence::total(std::size_t size) { return from_labels(std::vector<Index>(size, 0)); }

std::vector<std::vector<Index>> Congruence::blocks() const {
  std::vector<std::vector<Index>> out(blocks_);
  for (std::size_t a = 0; a < block_.size(); ++a) out[block_[a]].push_back(static_cast<Index>(a));
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  if (other.size() != size()) throw ShapeError("congruences over different carriers");
  std::vector<Index> image(blocks_, 0);
  std::vector<bool> set(blocks_, false);
  for (std::size_t a = 0; a < block_.size(); ++a) {
    const Index b = block_[a];
    if (!set[b]) {
      set[b] = true;
      image[b] = other.block_[a];
    } else if (image[b] != other.block_[a]) {
      return false;
    }
  }
  return true;
}

Congruence Congruence::join(const Congruence& other) const {
  if (other.size() != size()) throw ShapeError("congruences over different carriers");
  std::vector<Index> parent(size());
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite_by = [&](const std::vector<Index>& labels) {
    std::vector<Index> first(size(), static_cast<Index>(size()));
    for (std::size_t a = 0; a < size(); ++a) {
      Index& f = first[labels[a]];
      if (f == size()) {
        f = static_cast<Index>(a);
      } else {
        const Index ra = find(static_cast<Index>(a)), rf = find(f);
        if (ra != rf) parent[std::max(ra, rf)] = std::min(ra, rf);
      }
    }
  };
  unite_by(block_);
  unite_by(other.block_);
  std::vector<Index> labels(size());
  for (std::size_t a = 0; a < size(); ++a) labels[a] = find(static_cast<Index>(a));
  return from_labels(labels);
}

Congruence Congruence::meet(const Congruence& other) const {
  if (other.size() != size()) throw ShapeError("congruences over different carriers");
  std::vector<Index> labels(size());
  for (std::size_t a = 0; a < size(); ++a)
    labels[a] = static_cast<Index>(block_[a] * other.blocks_ + other.block_[a]);
  return from_labels(labels);
}

bool is_compatible(const TableAlgebra& alg, const Congruence& theta) {
  if (theta.size() != alg.size()) throw ShapeError("congruence size does not match algebra");
  const std::size_t s = alg.size();
  const std::size_t arity = static_cast<std::size_t>(alg.dim().value()) + 1;
  std::vector<Index> rep(theta.block_count(), 0);
  for (std::size_t a = s; a-- > 0;) rep[theta.block(static_cast<Index>(a))] = static_cast<Index>(a);
  std::vector<Index> args(arity, 0), reps(arity, 0);
  for (std::size_t row = 0; row < alg.q_table().size(); ++row) {
    std::size_t r = row;
    for (std::size_t p = arity; p-- > 0;) {
      args[p] = static_cast<Index>(r % s);
      reps[p] = rep[theta.block(args[p])];
      r /= s;
    }
    if (!theta.related(alg.q_table()[row], alg.q_args(reps))) return false;
  }
  return true;
}

}  // namespace nba
