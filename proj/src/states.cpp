#include "qbell/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

StateVector singlet(Spin s) {
    if (s.twice() < 1)
        throw std::invalid_argument("singlet: s must be at least 1/2");
    const int n = s.dimension();
    StateVector psi = StateVector::Zero(n * n);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) {
        // |m, -m> with m = s - i: Alice index i, Bob index n-1-i. The phase
        // (-1)^{s-m} is (-1)^i.
        const int j = n - 1 - i;
        psi(i * n + j) = (i % 2 == 0 ? amplitude : -amplitude);
    }
    return psi;
}

Complex rotated_overlap(const StateVector& state, const ComplexMatrix& r) {
    if (r.rows() != r.cols())
        throw std::invalid_argument("rotated_overlap: rotation must be square");
    if (state.size() != r.rows() * r.rows())
        throw std::invalid_argument("rotated_overlap: state/rotation dimension mismatch");
    if (!is_unitary(r))
        throw std::invalid_argument("rotated_overlap: rotation is not unitary");
    return state.dot(tensor(r, r) * state);
}

double invariance_defect(const StateVector& state, const ComplexMatrix& r) {
    return 1.0 - std::abs(rotated_overlap(state, r));
}

}  // namespace qbell
