#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "qsc/rational.hpp"

namespace qsc {

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros
/// dropped on construction. Indexing past the last part reads as 0, which
/// matches the padding-with-zeros convention used everywhere downstream.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<Int> parts);

  Int size() const;                      // number of boxes
  Int length() const { return static_cast<Int>(parts_.size()); }
  Int operator[](Int i) const {          // 0-based, zero-padded
    return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<Int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool fits(Int rows, Int cols) const { return length() <= rows && (*this)[0] <= cols; }
  Partition transpose() const;
  bool contains(const Partition& inner) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<Int> parts_;
};

struct PartitionHash {
  size_t operator()(const Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (Int x : p.parts()) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// A partition constrained to an r x c box.
struct BoxPartition {
  Partition inner;
  Int rows = 0;
  Int cols = 0;

  BoxPartition() = default;
  BoxPartition(Partition p, Int r, Int c);

  friend bool operator==(const BoxPartition&, const BoxPartition&) = default;
  friend std::strong_ordering operator<=>(const BoxPartition&, const BoxPartition&) = default;
};

/// I = {i_1 < ... < i_r} inside [n]; labels the Schubert cycle sigma_I of
/// Gr(r,n) with codim(I) = sum_a (n - r + a - i_a).
struct SchubertIndex {
  Int n = 0;
  std::vector<Int> elems;  // strictly increasing, in [1,n]

  SchubertIndex() = default;
  SchubertIndex(Int n_, std::vector<Int> elems_);

  Int rank() const { return static_cast<Int>(elems.size()); }
  Int codim() const;
  bool contains(Int a) const;

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  friend std::strong_ordering operator<=>(const SchubertIndex&, const SchubertIndex&) = default;
};

BoxPartition transpose_in_box(const BoxPartition& p);
BoxPartition complement_in_box(const BoxPartition& p);

/// lambda_a = n - r + a - i_a, landing in the r x (n-r) box.
BoxPartition index_to_partition(const SchubertIndex& I);
SchubertIndex partition_to_index(const BoxPartition& p);

}  // namespace qsc
