#pragma once

#include "qbell/spin.hpp"

namespace qbell {

// Total-spin-zero state of two spin-s particles in the |m_A, m_B> product
// basis (Alice's index is the coarse one, highest m first):
//
//   (2s+1)^{-1/2} sum_m (-1)^{s-m} |m, -m>
//
// For s = 3/2 the four nonzero amplitudes are +1/2, -1/2, +1/2, -1/2 on
// |3/2,-3/2>, |1/2,-1/2>, |-1/2,1/2>, |-3/2,3/2>. Requires s >= 1/2.
StateVector singlet(Spin s);

// <state| (r (x) r) |state> for a single-particle unitary r applied to both
// particles. For the singlet this is exactly 1: the double-cover signs of the
// two half-integer factors cancel.
Complex rotated_overlap(const StateVector& state, const ComplexMatrix& r);

// 1 - |<state|(r (x) r)|state>|. Zero (to tolerance) certifies invariance up
// to a global phase.
double invariance_defect(const StateVector& state, const ComplexMatrix& r);

}  // namespace qbell
