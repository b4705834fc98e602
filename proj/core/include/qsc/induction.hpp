#pragma once

#include <vector>

#include "qsc/divisor.hpp"
#include "qsc/weight.hpp"

namespace qsc {

/// Membership in Pic'(F): all interior equalities lambda^j_{a-1} =
/// lambda^j_a at admissible a > 1 hold, and lambda^j_1 = lambda^j_n + level
/// whenever (1, j) is admissible.
bool pic_prime_test(const LineBundleData& L, const FaceData& f);

/// Decomposition of a bundle on the face into basic-ray multiples plus a
/// Pic' component. The coefficients read off directly: each D(a,j) fails
/// exactly its own defining equality, by exactly one.
struct FaceDecomposition {
  FaceData face;
  struct Ray {
    Int a = 0;
    Int j = 0;
    LineBundleData cls;
    Int coefficient = 0;
  };
  std::vector<Ray> basic_rays;
  LineBundleData f2_part;
};
FaceDecomposition face_decompose(const LineBundleData& L, const FaceData& f);

/// Line-bundle data on the Levi side: sl_r data (subbundle factor, on
/// deg -d) and sl_{n-r} data (quotient factor, on deg d-D).
struct LeviBundle {
  Int sub_level = 0;
  std::vector<Weight> sub;
  Int quot_level = 0;
  std::vector<Weight> quot;
};

/// Numerical data of the two ramification factors A (subbundle side) and
/// A' (quotient side): determinant-of-cohomology powers, point twists, and
/// the Schubert weights / their transposes.
struct RamificationData {
  Int sub_det_power = 0;    // n - r
  Int sub_point_twist = 0;  // d - D
  std::vector<Partition> sub_weights;  // lambda(I^j)
  Int quot_det_power = 0;   // r
  Int quot_point_twist = 0; // d
  std::vector<Partition> quot_weights;  // lambda(I^j)^T
};
RamificationData ramification_bundles(const FaceData& f);

/// Level-zero induction: interleave subbundle and quotient weights into the
/// positions I^j / complement, then correct by the gap multiples of the
/// basic rays. Levels of the input must vanish.
LineBundleData induce_level_zero(const LeviBundle& levi, const FaceData& f);

/// Full induction, including determinant-of-cohomology factors, by solving
/// the linear relations Ind(A x 1) = 0 and Ind(1 x A') = 0 together with
/// the Pic'-gauge of the global determinant class. Internal cross-checks
/// (point-independence of the fiber class, the gauge identity) throw on
/// failure.
LineBundleData induce(const LeviBundle& levi, const FaceData& f);

}  // namespace qsc
