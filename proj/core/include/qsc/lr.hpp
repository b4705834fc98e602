#pragma once

#include <map>

#include "qsc/partition.hpp"

namespace qsc {

/// c^nu_{lambda,mu}: multiplicity of s_nu in s_lambda * s_mu, computed by
/// direct enumeration of Littlewood-Richardson skew tableaux of shape
/// nu/lambda and content mu. Deliberately the slow, definition-level count:
/// it serves as the independent oracle for the product expansion below.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Full expansion s_lambda * s_mu = sum c^nu s_nu over nu with at most
/// max_rows rows, via the Jacobi-Trudi determinant for s_mu and iterated
/// Pieri (horizontal-strip) multiplications. Memoized process-wide; safe
/// for concurrent callers.
const std::map<Partition, Int>& lr_expand(Int max_rows, const Partition& lambda,
                                          const Partition& mu);

}  // namespace qsc
