#pragma once

#include <cstddef>
#include <vector>

#include "nba/algebra_core.hpp"

namespace nba {

/// Equivalence relation on a carrier {0..size-1}, stored as one block label per
/// element. Labels are canonical: blocks are numbered in order of their least element.
class Congruence {
 public:
  Congruence() = default;
  static Congruence from_labels(const std::vector<Index>& labels);
  static Congruence diagonal(std::size_t size);
  static Congruence total(std::size_t size);

  std::size_t size() const { return block_.size(); }
  std::size_t block_count() const { return blocks_; }
  Index block(Index a) const { return block_.at(a); }
  const std::vector<Index>& labels() const { return block_; }
  bool related(Index a, Index b) const { return block_.at(a) == block_.at(b); }
  /// Blocks as ascending index lists, in label order.
  std::vector<std::vector<Index>> blocks() const;

  bool is_diagonal() const { return blocks_ == block_.size(); }
  bool is_total() const { return blocks_ <= 1; }
  bool refines(const Congruence& other) const;
  Congruence join(const Congruence& other) const;
  Congruence meet(const Congruence& other) const;

  bool operator==(const Congruence&) const = default;

 private:
  std::vector<Index> block_;
  std::size_t blocks_ = 0;
};

/// True iff q maps related argument tuples to related results.
bool is_compatible(const TableAlgebra& alg, const Congruence& theta);

}  // namespace nba
