#pragma once

#include "qbell/linalg.hpp"

namespace qbell {

// Half-integer spin quantum number, stored as 2s so values like 3/2 stay
// exact.
class Spin {
public:
    // Accepts s with 2s a nonnegative integer, rejects everything else.
    static Spin of(double s);

    explicit Spin(int twice_s);

    double value() const { return 0.5 * twice_s_; }
    int twice() const { return twice_s_; }
    int dimension() const { return twice_s_ + 1; }

private:
    int twice_s_;
};

// Spin component operators for one particle. Basis order is m = s, s-1,
// ..., -s (highest first), so sz is diagonal with those entries, sx is real
// symmetric and sy is pure imaginary antisymmetric.
struct SpinTriple {
    Spin s;
    ComplexMatrix sx;
    ComplexMatrix sy;
    ComplexMatrix sz;
};

// Built from ladder operators with nonnegative (Condon-Shortley) coefficients
// sqrt(s(s+1) - m(m+-1)). Satisfies [sx,sy] = i sz and cyclic permutations.
SpinTriple spin_operators(Spin s);

}  // namespace qbell
