#pragma once

#include <optional>
#include <vector>

#include "qsc/divisor.hpp"
#include "qsc/weight.hpp"

namespace qsc {

/// Outcome of classifying a conjugacy-class tuple.
struct RigidReport {
  ConjClassTuple input;
  bool exists_unitary = false;     // some unitary local system realizes the data
  bool irreducible_forced = false; // every unitary realization is irreducible
  bool rigid_unitary = false;      // a unitary irreducible rigid system exists
  bool finite_monodromy = false;   // all Galois twists stay rigid
  LineBundleData dual_bundle;
  std::optional<CycleData> witness_cycle;  // set when rigid_unitary
  Int sections = 0;                        // h0 of the dual bundle
};

/// B(lambda_vec, l) on Par_{n,O,S} with lambda^i the transpose of the
/// exponent diagram mu^i; grade zero by the determinant condition.
LineBundleData to_bundle(const ConjClassTuple& A);
ConjClassTuple from_bundle(const LineBundleData& L);

/// v(A) = (kappa(lambda^i / l))_i in Delta_n^s.
std::vector<AlcovePoint> v_of_A(const ConjClassTuple& A);

/// F-line-bundle test of an indivisible grade-zero bundle: search for a
/// codimension-one witness cycle whose class equals the bundle and whose
/// strict effectivity inequality holds. Returns the witness if found.
std::optional<CycleData> f_line_bundle_witness(const LineBundleData& L);

RigidReport classify(const ConjClassTuple& A);

/// Finite-monodromy test: every T_m twist (m coprime to n) of the dual
/// bundle must remain an F-line bundle. Precondition: rigid_unitary.
bool galois_test(const ConjClassTuple& A);

/// Property (P): no local class contains eigenvalue exponents e and e+1
/// mod n. The strengthened form excludes every ratio that is a primitive
/// n-th root of unity.
bool property_P(const ConjClassTuple& A, bool strengthened = false);

struct RigidityNumerics {
  Int lhs = 0;       // sum of squared multiplicities
  Int rhs = 0;       // (s-2) l^2 + 2
  bool bound_ok = false;  // sum rk(A_i - zeta I) >= 2l for all central twists
};
RigidityNumerics rigidity_numerics(const ConjClassTuple& A);

/// Full catalog of rigid unitary tuples with n-th root local monodromy,
/// one per symmetry orbit (from the F-vertex catalog via strange duality).
std::vector<RigidReport> rigid_catalog(Int n, Int s);

}  // namespace qsc
