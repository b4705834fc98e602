#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qsc/qschubert.hpp"
#include "qsc/weight.hpp"

namespace qsc {

/// Degeneracy-cycle datum C(d, r, O(-D), n, J_vec) on Par_{n,O(-D),S}:
/// parabolic bundles carrying a rank-r degree--d subsheaf meeting the flags
/// in the Schubert positions J^i. Divisor-class formulas require codim 1.
struct CycleData {
  Int d = 0;
  Int r = 0;
  Int n = 0;
  Int D = 0;
  std::vector<SchubertIndex> J;

  Int s() const { return static_cast<Int>(J.size()); }
  /// sum |sigma_{J^i}| - (d n - D r + r(n-r))
  Int codim() const;

  friend bool operator==(const CycleData&, const CycleData&) = default;
  friend std::strong_ordering operator<=>(const CycleData&, const CycleData&) = default;
};

/// Face datum: index tuple with <sigma_{I^1},...,sigma_{I^s}>_{d,D} = 1,
/// defining a regular face of the effective cone.
struct FaceData {
  Int d = 0;
  Int r = 0;
  Int n = 0;
  Int D = 0;
  std::vector<SchubertIndex> I;

  Int s() const { return static_cast<Int>(I.size()); }
  Int gw() const;

  friend bool operator==(const FaceData&, const FaceData&) = default;
  friend std::strong_ordering operator<=>(const FaceData&, const FaceData&) = default;
};

/// Semisimple conjugacy-class tuple in GL(l): eigenvalues exp(2 pi i m / n)
/// with exponent multisets recorded as partitions in an l x n box with
/// first part < n. The (A)-side of strange duality.
struct ConjClassTuple {
  Int rank = 0;  // l
  Int n = 0;
  std::vector<Partition> classes;  // exponent partitions mu^i

  Int s() const { return static_cast<Int>(classes.size()); }
  bool det_condition() const;  // n | sum |mu^i|
  void validate() const;
  /// multiplicity of exponent e (0 <= e < n) in class i
  Int multiplicity(Int i, Int e) const;

  friend bool operator==(const ConjClassTuple&, const ConjClassTuple&) = default;
  friend std::strong_ordering operator<=>(const ConjClassTuple&, const ConjClassTuple&) = default;
};

/// O(E) = B(lambda_vec, l) for a codimension-one cycle: the level is the
/// four-point number with the extra index {1, n-r+1, ..., n-1} at degree
/// d+1, the fundamental coefficients come from single-index swaps at degree
/// d, and the eigenvalue-1 slack from the 1 <-> n swap at degree d+1. The
/// two routes to the slack are compared and internal inconsistencies throw.
LineBundleData divisor_class(const CycleData& c);

/// Whether (a, j) names an admissible degeneracy pair on the face: a > 1
/// with a in I^j, a-1 not in I^j, or a = 1 with 1 in I^j, n not in I^j.
bool daj_admissible(const FaceData& f, Int a, Int j);

/// The basic extremal ray D(a,j) attached to a face: its defining cycle and
/// its divisor class. The class satisfies the face equality.
std::pair<CycleData, LineBundleData> build_Daj(const FaceData& f, Int a, Int j);

/// Local monodromy data of the unitary irreducible rigid local system
/// attached to D(a,j): rank l, eigenvalue exp(2 pi i b/n) with multiplicity
/// c_i^b and eigenvalue 1 with the slack multiplicity.
ConjClassTuple rigid_from_face(const FaceData& f, Int a, Int j);

/// Exponent data of a bundle's strange dual: transposes of the weights.
ConjClassTuple bundle_to_classes(const LineBundleData& L);

/// All codimension-one cycles with D = 0 (plus the d = -1 layer that
/// carries the determinant-of-cohomology bundle), for 1 <= r < n. The
/// degree range is forced by the codimension equation:
/// d n = sum |sigma_{J^i}| - r(n-r) - 1 <= (s-1) r (n-r) - 1.
void enumerate_codim1_cycles(Int n, Int s, std::optional<Int> d_max,
                             const std::function<void(const CycleData&)>& sink);

/// Left and right sides of the face equality
/// sum_j sum_{k in I^j} lambda^j_k = d*l + sum_j r |lambda^j| / n
/// evaluated for a bundle against a face.
std::pair<Rat, Rat> face_pairing(const FaceData& f, const LineBundleData& L);

}  // namespace qsc
