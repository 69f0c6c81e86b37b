#include "nba/transforms.hpp"

#include <algorithm>
#include <numeric>

namespace nba {

const char* bin_kind_name(BinKind k) {
  switch (k) {
    case BinKind::meet: return "and";
    case BinKind::join: return "or";
    case BinKind::minus: return "sub";
    case BinKind::barwedge: return "bw";
    case BinKind::barvee: return "bv";
  }
  return "?";
}

int designated_zero(IndexSet d, int n, const BinDesignation& des) {
  d.check(n);
  const int i = des.zero.value_or(d.min());
  if (!d.contains(i))
    throw PreconditionError("designated zero e" + std::to_string(i) + " must have its index in d");
  return i;
}

int designated_one(IndexSet d, int n, const BinDesignation& des) {
  d.check(n);
  const IndexSet rest = d.complement(n);
  if (rest.empty()) throw PreconditionError("join needs an index j outside d, but d = 1..n");
  const int j = des.one.value_or(rest.min());
  if (!rest.contains(j))
    throw PreconditionError("designated one e" + std::to_string(j) + " must have its index outside d");
  return j;
}

void CenterParams::check(int n) const {
  if (i < 1 || i > n || j < 1 || j > n)
    throw SubscriptError("center indices must lie in 1.." + std::to_string(n));
  if (i == j) throw PreconditionError("center indices must differ");
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int k : images_) {
    if (k < 1 || k > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(k)])
      throw PreconditionError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(k)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int r, int k) {
  auto v = identity(n).images_;
  if (r < 1 || r > n || k < 1 || k > n) throw SubscriptError("transposition index out of range");
  std::swap(v[static_cast<std::size_t>(r - 1)], v[static_cast<std::size_t>(k - 1)]);
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  auto v = identity(n).images_;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size() != size()) throw PreconditionError("composing permutations of different sizes");
  std::vector<int> v(images_.size());
  for (int k = 1; k <= size(); ++k) v[static_cast<std::size_t>(k - 1)] = (*this)(other(k));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int k = 1; k <= size(); ++k) v[static_cast<std::size_t>((*this)(k) - 1)] = k;
  return Permutation(std::move(v));
}

std::vector<SumShape> SumShape::all(std::size_t n) {
  std::vector<std::vector<std::size_t>> merge_seqs;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t items) -> void {
    if (items <= 1) {
      merge_seqs.push_back(cur);
      return;
    }
    for (std::size_t p = 0; p + 1 < items; ++p) {
      cur.push_back(p);
      self(self, items - 1);
      cur.pop_back();
    }
  };
  rec(rec, n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<SumShape> out;
  do {
    for (const auto& m : merge_seqs) out.push_back(SumShape{order, m});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace nba
