#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qsc/lr.hpp"
#include "qsc/partition.hpp"

namespace qsc {

class GrassmannianRing;

/// Element of the small quantum cohomology ring QH*(Gr(r,n)): a finite
/// Z_{>=0}-combination of basis elements q^d sigma_lambda with lambda in the
/// r x (n-r) box.
class QClass {
public:
  using Key = std::pair<Partition, Int>;  // (lambda, q-degree)

  QClass() = default;
  explicit QClass(const GrassmannianRing* ring) : ring_(ring) {}

  const std::map<Key, Int>& terms() const { return terms_; }
  const GrassmannianRing* ring() const { return ring_; }
  Int coefficient(const Partition& p, Int degree) const;
  void add(const Partition& p, Int degree, Int c);
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const QClass&, const QClass&) = default;

private:
  const GrassmannianRing* ring_ = nullptr;
  std::map<Key, Int> terms_;
};

/// Generalized Gromov-Witten query <sigma_{I^1},...,sigma_{I^s}>_{d,D} for
/// subbundles of degree -d and rank r of a general rank-n bundle of degree
/// -D. D = 0 recovers the maps-counting invariants.
struct GWQuery {
  Int r = 0;
  Int n = 0;
  Int d = 0;
  Int D = 0;
  std::vector<SchubertIndex> indices;
};

class GrassmannianRing {
public:
  GrassmannianRing(Int r, Int n);

  Int r() const { return r_; }
  Int n() const { return n_; }
  Int dim() const { return r_ * (n_ - r_); }

  /// All partitions in the r x (n-r) box; |basis| = C(n,r).
  std::vector<Partition> basis() const;

  QClass unit() const;
  QClass schubert(const Partition& p) const;
  QClass schubert(const SchubertIndex& I) const;

  /// Small quantum product, via rim-hook reduction of the classical
  /// Littlewood-Richardson expansion.
  QClass product(const QClass& a, const QClass& b) const;

  /// Reduce a partition with at most r rows modulo n-rim-hooks. Returns the
  /// box representative, the number of hooks removed, and the sign, or
  /// nullopt if the reduction dies (two beta-numbers collide mod n).
  struct Reduction {
    Partition box;
    Int hooks;
    Int sign;
  };
  std::optional<Reduction> reduce(const Partition& p) const;

  /// Genus-0 s-point invariant from partitions in the box; zero on
  /// codimension mismatch. Requires s >= 2.
  Int gw(const std::vector<Partition>& classes, Int d) const;

private:
  QClass fold(const std::vector<Partition>& classes, size_t lo, size_t hi) const;

  Int r_;
  Int n_;
};

/// Shared per-(r,n) ring instances.
const GrassmannianRing& ring(Int r, Int n);

/// <sigma_{I^1},...,sigma_{I^s}>_d on Gr(r,n) with trivial determinant
/// (D = 0); d >= 0.
Int gw_invariant(Int r, Int n, const std::vector<SchubertIndex>& indices, Int d);

/// <...>_{d,D}: reduces to D = 0 by index shifts at the first point (each
/// shift decrements every element, wrapping 1 -> n with a degree drop), then
/// evaluates gw_invariant.
Int gw_generalized(const GWQuery& q);

/// One D-lowering shift step applied in place at point `at`.
void shift_query(GWQuery& q, size_t at);
/// One D-raising (inverse) shift step.
void unshift_query(GWQuery& q, size_t at);

}  // namespace qsc
