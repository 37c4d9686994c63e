#pragma once

#include <array>

#include "cohom1/profiles.hpp"

namespace cohom1 {

// Matrix-level recomputation of the metric functions from first
// principles.  These are ground-truth oracles for the closed forms in
// profiles.*: they share no code path with them.

// |[E_12, gamma]|^2, |[E_23, gamma]|^2, |[E_13, gamma]|^2 for the
// conjugation action on traceless symmetric 3x3 matrices along
// gamma(t) = cos(t) e1 + sin(t) e2, inner product tr(AB).
std::array<double, 3> s4_action_norms(double t);

// (f1, g1, h1) on SO(5)/SO(3): action fields Ad(exp(-t F_12)) applied to
// F_23 +- F_45, projected off H_1 = 2 F_23 + F_45 under Q(A,B) = -tr(AB)/2.
std::array<double, 3> b7_action_norms(double t);

// Biquotient oracle for E_p: su(3) with the biinvariant form scaled by
// eps on the u(2) subalgebra diag(A, det conj(A)), action fields
// projected off the vertical vector of the circle quotient.
struct EschenburgDetails {
  MetricBlocks blocks;
  double v_norm2 = 0;          // computed eps-norm of the vertical vector
  double v_norm2_closed = 0;   // 3e + (1-p)^2(1-e)c^2 s^2 + e(p+2)(p-1)s^2
  double horizontality = 0;    // max |<Xbar_i, v>| over i = 2, 3 and both factors
  double max_cross_product = 0;  // max |<A*, B*>| over the declared-zero pairs
};

EschenburgDetails eschenburg_details(int p, double eps, double t);
MetricBlocks eschenburg_oracle(int p, double eps, double t);

}  // namespace cohom1
