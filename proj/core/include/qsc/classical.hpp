#pragma once

#include <vector>

#include "qsc/divisor.hpp"
#include "qsc/kz.hpp"
#include "qsc/rational.hpp"

namespace qsc {

/// Generalized hypergeometric lFl-1 datum: local exponents 1 - beta_i at 0,
/// alpha_i at infinity, and 0..l-2, -1 + sum(beta - alpha) at 1.
struct HypergeomData {
  std::vector<Rat> alpha;
  std::vector<Rat> beta;

  Int rank() const { return static_cast<Int>(alpha.size()); }
  void validate() const;
  bool irreducible() const;  // alpha_i - beta_j never integral
};

/// Pochhammer datum of rank l on P^1 minus l+1 points: exponents 0^{l-1},
/// lambda_i at t_i and -rho^{l-1}, -rho' at infinity with
/// rho' = sum lambda - (l-1) rho.
struct PochhammerData {
  std::vector<Rat> lambda;
  Rat rho;

  Int rank() const { return static_cast<Int>(lambda.size()); }
  Rat rho_prime() const;
  bool irreducible() const;
};

/// Interlacing criterion for unitarizable hypergeometric monodromy: the
/// fractional parts of alpha and beta strictly alternate in one of the two
/// orders.
bool hypergeom_unitary(const HypergeomData& h);

/// Haraoka's fractional-part criterion. Throws if the irreducibility
/// precondition fails.
bool pochhammer_unitary(const PochhammerData& p);

/// Exponent tables at 0, 1, infinity (in that order).
LocalExponentTable hypergeom_exponents(const HypergeomData& h);

/// One rank-lowering step: from a unitary system whose exponents are n-th
/// roots presented in the interlacing normal form, produce the rank-(l-1)
/// unitary hypergeometric system.
HypergeomData hypergeom_katz_lower(const HypergeomData& h);

/// Eigenvalue-exponent classes of the three local monodromies, over a
/// common root order n (classes at 1, 0, infinity).
ConjClassTuple hypergeom_classes(const HypergeomData& h);

}  // namespace qsc
