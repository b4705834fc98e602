#include "qsc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsc {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts not weakly decreasing");
  }
}

Int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

Partition Partition::transpose() const {
  std::vector<Int> t(static_cast<size_t>((*this)[0]), 0);
  for (Int c = 0; c < (*this)[0]; ++c) {
    Int count = 0;
    for (Int part : parts_)
      if (part > c) ++count;
    t[static_cast<size_t>(c)] = count;
  }
  return Partition(std::move(t));
}

bool Partition::contains(const Partition& inner) const {
  for (Int i = 0; i < inner.length(); ++i)
    if (inner[i] > (*this)[i]) return false;
  return true;
}

BoxPartition::BoxPartition(Partition p, Int r, Int c) : inner(std::move(p)), rows(r), cols(c) {
  if (rows <= 0 || cols < 0) throw std::invalid_argument("BoxPartition: bad box");
  if (!inner.fits(rows, cols)) throw std::invalid_argument("BoxPartition: partition exceeds box");
}

SchubertIndex::SchubertIndex(Int n_, std::vector<Int> elems_) : n(n_), elems(std::move(elems_)) {
  if (n <= 0) throw std::invalid_argument("SchubertIndex: n must be positive");
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1 || elems[i] > n) throw std::invalid_argument("SchubertIndex: element out of [1,n]");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw std::invalid_argument("SchubertIndex: elements not strictly increasing");
  }
}

Int SchubertIndex::codim() const {
  Int r = rank(), c = 0;
  for (Int a = 1; a <= r; ++a) c += n - r + a - elems[static_cast<size_t>(a - 1)];
  return c;
}

bool SchubertIndex::contains(Int a) const {
  return std::binary_search(elems.begin(), elems.end(), a);
}

BoxPartition transpose_in_box(const BoxPartition& p) {
  std::vector<Int> t;
  t.reserve(static_cast<size_t>(p.cols));
  for (Int c = 0; c < p.cols; ++c) {
    Int count = 0;
    for (Int i = 0; i < p.rows; ++i)
      if (p.inner[i] > c) ++count;
    t.push_back(count);
  }
  return BoxPartition(Partition(std::move(t)), p.cols, p.rows);
}

BoxPartition complement_in_box(const BoxPartition& p) {
  std::vector<Int> c;
  c.reserve(static_cast<size_t>(p.rows));
  for (Int a = 0; a < p.rows; ++a) c.push_back(p.cols - p.inner[p.rows - 1 - a]);
  return BoxPartition(Partition(std::move(c)), p.rows, p.cols);
}

BoxPartition index_to_partition(const SchubertIndex& I) {
  Int r = I.rank();
  std::vector<Int> lam;
  lam.reserve(static_cast<size_t>(r));
  for (Int a = 1; a <= r; ++a) lam.push_back(I.n - r + a - I.elems[static_cast<size_t>(a - 1)]);
  return BoxPartition(Partition(std::move(lam)), r, I.n - r);
}

SchubertIndex partition_to_index(const BoxPartition& p) {
  Int r = p.rows, n = p.rows + p.cols;
  std::vector<Int> elems;
  elems.reserve(static_cast<size_t>(r));
  for (Int a = 1; a <= r; ++a) elems.push_back(n - r + a - p.inner[a - 1]);
  return SchubertIndex(n, std::move(elems));
}

}  // namespace qsc
