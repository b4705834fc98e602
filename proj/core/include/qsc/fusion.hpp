#pragma once

#include <vector>

#include "qsc/qschubert.hpp"
#include "qsc/weight.hpp"

namespace qsc {

/// Fusion ring data for sl_r at level k.
struct FusionAlgebra {
  Int r = 0;
  Int k = 0;

  FusionAlgebra(Int r_, Int k_);
  /// All dominant integral weights of level <= k; C(r-1+k, k) of them.
  std::vector<Weight> weights() const;
};

/// Genus-0 s-point conformal block rank via the Verlinde S-matrix sum,
/// evaluated in floating point and rounded; throws if the rounding residue
/// exceeds 1e-6 even after escalating the working precision. This path is
/// algorithmically independent of the quantum-ring computation and serves
/// as its oracle.
Int verlinde_rank(const FusionAlgebra& alg, const std::vector<Weight>& nu);

/// Exact fusion rank through the small quantum ring of Gr(r, r+k).
Int fusion_rank(Int r, Int k, const std::vector<Weight>& nu);

/// h^0 of B(lambda_vec, level) on Par_{n, O(degN), S}: zero unless the grade
/// vanishes and the weights are dominant of the level; otherwise the
/// sl_n fusion rank after shifting degN to zero. Exact.
Int h0(const LineBundleData& L);

/// The same count through the Verlinde oracle.
Int h0_verlinde(const LineBundleData& L);

/// Witten dictionary: evaluates a GW query as a conformal block rank for
/// sl_r at level n-r (d-fold level-shift of the first weight), through the
/// Verlinde oracle. Must agree with gw_generalized.
Int witten_rank(const GWQuery& q);

/// When enabled, h0 cross-checks the exact value against the Verlinde
/// oracle and throws qsc::internal_error on disagreement.
void set_verify_oracles(bool on);
bool verify_oracles();

/// Starting precision for the Verlinde sum: 0 = double with escalation
/// (default), 1 = long double directly.
void set_verlinde_precision(int level);
int verlinde_precision();

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qsc
