#pragma once

#include <vector>

#include "qsc/partition.hpp"
#include "qsc/rational.hpp"

namespace qsc {

/// Integral weight of sl_n in row form, stored with the normalization
/// rows[n-1] = 0 (row forms differing by a constant vector give the same
/// weight). Dominant iff rows weakly decrease; of level l iff
/// rows[0] - rows[n-1] <= l.
class Weight {
public:
  Weight() = default;
  Weight(Int n, std::vector<Int> rows);

  static Weight zero(Int n) { return Weight(n, std::vector<Int>(static_cast<size_t>(n), 0)); }
  static Weight fundamental(Int n, Int b);  // omega_b
  static Weight from_fundamental(Int n, const std::vector<Int>& coeffs);  // sum c_b omega_b
  static Weight from_partition(Int n, const Partition& p);

  Int n() const { return n_; }
  Int row(Int i) const { return rows_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<Int>& rows() const { return rows_; }
  Int size() const;                          // |lambda| of the normalized form
  Int width() const { return rows_.empty() ? 0 : rows_.front() - rows_.back(); }
  bool dominant() const;
  bool is_zero() const;

  /// c_b = rows[b-1] - rows[b], b = 1..n-1.
  std::vector<Int> fundamental_coeffs() const;
  Partition to_partition() const;
  Weight dual() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight&, const Weight&) = default;

private:
  Int n_ = 0;
  std::vector<Int> rows_;
};

/// Point of the SU(n) alcove: a_1 >= ... >= a_n >= a_1 - 1, sum a_i = 0.
struct AlcovePoint {
  Int n = 0;
  std::vector<Rat> coords;

  AlcovePoint() = default;
  AlcovePoint(Int n_, std::vector<Rat> coords_);

  static AlcovePoint center(Int n);
  bool in_alcove() const;

  friend bool operator==(const AlcovePoint&, const AlcovePoint&) = default;
  friend std::strong_ordering operator<=>(const AlcovePoint&, const AlcovePoint&) = default;
};

/// Numerical data of B(lambda_vec, l) on Par_{n,N,S} with deg N = degN.
struct LineBundleData {
  Int n = 0;
  Int degN = 0;
  std::vector<Weight> weights;
  Int level = 0;

  Int s() const { return static_cast<Int>(weights.size()); }
  Int grade() const;  // (sum |lambda^i| + level * degN) mod n
  bool dominant_of_level() const;

  friend bool operator==(const LineBundleData&, const LineBundleData&) = default;
  friend std::strong_ordering operator<=>(const LineBundleData&, const LineBundleData&) = default;
};

/// Killing-form identification: a_k = lambda_k / l - |lambda| / (n l).
AlcovePoint kappa(const Weight& w, Int level);

enum class ShiftDirection { forward, inverse };

/// Shift operation on line-bundle data at one marked point. Forward raises
/// degN by one and replaces the weight's rows by (l_2,...,l_n, l_1 - level);
/// inverse undoes it. Both preserve the grade and the section count of the
/// bundle under the stack identification.
LineBundleData shift_bundle(const LineBundleData& L, Int point, ShiftDirection dir);

/// Galois twist T_m: relabels fundamental coefficients by b -> m*b mod n.
/// Requires gcd(m, n) = 1.
Weight galois_Tm(const Weight& w, Int m);

/// Divide (lambda_vec, l) by the largest integer keeping all data integral;
/// input must have grade zero and positive level.
LineBundleData normalize_indivisible(const LineBundleData& L);

/// Indivisible grade-zero bundle whose kappa-points recover the tuple
/// (clears denominators, normalizes rows, divides out common content).
LineBundleData vertex_to_bundle(const std::vector<AlcovePoint>& points);

/// Same clearing as vertex_to_bundle but without the indivisibility
/// division; used for membership tests where scaling must not change.
LineBundleData vertex_to_bundle_raw(const std::vector<AlcovePoint>& points);

/// Action of the center: multiply the conjugacy class by zeta_n^m. On the
/// alcove this is the m-fold rotation (a_{m+1},...,a_n, a_1-1,...,a_m-1) + m/n.
AlcovePoint central_twist(const AlcovePoint& a, Int m);

}  // namespace qsc
