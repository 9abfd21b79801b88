#include "qbell/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

Spin Spin::of(double s) {
    const double doubled = 2.0 * s;
    const double rounded = std::round(doubled);
    if (std::abs(doubled - rounded) > 1e-9 || rounded < 0.0)
        throw std::invalid_argument("Spin: 2s must be a nonnegative integer");
    return Spin(static_cast<int>(rounded));
}

Spin::Spin(int twice_s) : twice_s_(twice_s) {
    if (twice_s < 0) throw std::invalid_argument("Spin: 2s must be nonnegative");
}

SpinTriple spin_operators(Spin s) {
    const int n = s.dimension();
    const double sv = s.value();
    ComplexMatrix sx = ComplexMatrix::Zero(n, n);
    ComplexMatrix sy = ComplexMatrix::Zero(n, n);
    ComplexMatrix sz = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) sz(i, i) = sv - i;
    // With highest m first, the raising operator sits on the superdiagonal:
    // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>, and |m+1> is one row above |m>.
    // The lowering coefficient into the same slot pair is identical.
    for (int i = 1; i < n; ++i) {
        const double m = sv - i;
        const double c = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
        sx(i - 1, i) = 0.5 * c;  // (S+ + S-) / 2
        sx(i, i - 1) = 0.5 * c;
        sy(i - 1, i) = Complex(0.0, -0.5 * c);  // (S+ - S-) / 2i
        sy(i, i - 1) = Complex(0.0, 0.5 * c);
    }
    return {s, sx, sy, sz};
}

}  // namespace qbell
