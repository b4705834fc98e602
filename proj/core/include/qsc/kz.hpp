#pragma once

#include <map>
#include <vector>

#include "qsc/divisor.hpp"
#include "qsc/rational.hpp"
#include "qsc/weight.hpp"

namespace qsc {

/// KZ data on conformal blocks for sl_r at level k: s finite points with
/// weights nu^1..nu^s plus the moving point carrying omega_1 (and the
/// trivial weight at infinity).
struct KZSystem {
  Int r = 0;
  Int k = 0;
  std::vector<Weight> nu;  // s weights at the finite points

  Int s() const { return static_cast<Int>(nu.size()); }
  Int rank() const;  // block rank of (nu^1, ..., nu^s, omega_1)
};

/// Local exponents of the residue of the logarithmic connection, with
/// multiplicities, at each finite point plus the central exponent at
/// infinity. Exponents are exact rationals.
struct LocalExponentTable {
  std::vector<std::map<Rat, Int>> finite;  // one multiset per finite point
  Rat at_infinity;                         // central, multiplicity = rank
  Int rank = 0;
};

/// Normalized-Killing Casimir c(lambda) = (lambda, lambda + 2 rho); shift
/// invariant in the row form.
Rat casimir(const Weight& lambda);

/// Fusion with the vector representation: the weights nu + L_j at level k,
/// each with multiplicity one, including the boundary case that subtracts
/// the determinant. Returned as (j, gamma) pairs with j the box row.
std::vector<std::pair<Int, Weight>> fuse_with_vector(const Weight& nu, Int k);

LocalExponentTable kz_exponents(const KZSystem& sys);

/// Local data of the twisted KZ system attached to a codimension-one cycle
/// (the (L1) side) and of the strange-dual family (the (L2) side), compared
/// as eigenvalue-exponent multisets mod 1 at every point including
/// infinity. Also verifies the per-gamma multiplicity identity
/// c_i^b = rk V_{..., gamma}.
bool match_strange_dual(const CycleData& c);

}  // namespace qsc
