#include "qbell/rotations.hpp"

#include "qbell/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbell {

ComplexMatrix rotation_operator(const RotationSpec& spec, Spin s) {
    if (std::abs(spec.axis.norm() - 1.0) > kTol)
        throw std::invalid_argument("rotation_operator: axis must be unit length");
    const SpinTriple t = spin_operators(s);
    const ComplexMatrix generator =
        spec.axis.x() * t.sx + spec.axis.y() * t.sy + spec.axis.z() * t.sz;
    return exp_skew_hermitian(generator, spec.angle);
}

RotationSpec random_rotation(std::uint64_t seed) {
    Rng rng(seed);
    Eigen::Vector3d axis;
    do {
        axis = {rng.normal(), rng.normal(), rng.normal()};
    } while (axis.norm() < 1e-6);
    axis.normalize();
    const double angle = rng.uniform(0.0, 4.0 * std::numbers::pi);
    return {axis, angle};
}

}  // namespace qbell
