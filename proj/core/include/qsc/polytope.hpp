#pragma once

#include <optional>
#include <set>
#include <vector>

#include "qsc/divisor.hpp"
#include "qsc/weight.hpp"

namespace qsc {

/// One inequality of the system cutting out P_n(s) inside Delta_n^s:
/// sum_{j,k} normal[j][k] a^j_k <= rhs. Regular facets carry the face datum
/// (an index tuple with Gromov-Witten number one); alcove walls are the
/// simplex constraints and are flagged separately.
struct Facet {
  bool regular = false;
  FaceData face;                          // populated when regular
  std::vector<std::vector<Rat>> normal;   // s x n
  Rat rhs;

  Rat eval(const std::vector<AlcovePoint>& pts) const;
  bool active_at(const std::vector<AlcovePoint>& pts) const { return eval(pts) == rhs; }

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Certificate that a tuple is an F-vertex: the kappa-point, the indivisible
/// grade-zero bundle, a codimension-one witness cycle passing the strict
/// effectivity inequality, and the facets active at the point.
struct FVertexCertificate {
  std::vector<AlcovePoint> point;
  LineBundleData bundle;
  CycleData witness;
  std::vector<Facet> active_facets;
  Int orbit_size = 1;
};

/// All inequalities of P_n(s): the regular facets (every (d, r, I_vec) with
/// gw = 1 inside the degree bound forced by the codimension balance) plus
/// the alcove walls.
std::vector<Facet> facets(Int n, Int s, std::optional<Int> d_max = std::nullopt);

/// Exact membership in P_n(s). Both routes (facet scan, section count of
/// the cleared bundle) are evaluated and must agree.
bool membership(const std::vector<AlcovePoint>& pts);

/// All F-vertices of P_n(s), one certificate per orbit of the symmetry
/// group tau_n(s) x S_s; representatives are lexicographically least weight
/// matrices.
std::vector<FVertexCertificate> f_vertices(Int n, Int s);

/// True iff the active constraint normals at the point span the full
/// ambient affine hull of Delta_n^s (rank s*n together with the per-point
/// trace conditions). Requires membership.
bool certify_vertex(const std::vector<AlcovePoint>& pts);

/// Exhaustive vertex enumeration of the H-polytope by exact double
/// description; guarded to n <= 4, s = 3.
std::vector<std::vector<AlcovePoint>> dd_vertex_enumeration(Int n, Int s);

/// Orbit of a tuple under central twists (sum m_i = 0 mod n) and point
/// permutations.
std::set<std::vector<AlcovePoint>> symmetry_orbit(const std::vector<AlcovePoint>& pts);

/// The bundle-side action used for orbit bookkeeping: m-fold shifts at each
/// point (sum m_i = 0 mod n) followed by a permutation.
LineBundleData canonical_orbit_bundle(const LineBundleData& L, Int* orbit_size = nullptr);

/// All central tuples (zeta^{m_1} I, ..., zeta^{m_s} I) with n | sum m_i;
/// these are the trivial vertices of P_n(s).
std::vector<std::vector<AlcovePoint>> central_vertices(Int n, Int s);

/// Worker threads used by the facet and F-vertex scans (default 1).
void set_scan_threads(Int t);
Int scan_threads();

}  // namespace qsc
