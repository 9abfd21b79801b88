#pragma once

#include "qbell/spin.hpp"

#include <cstdint>

namespace qbell {

// Axis-angle rotation. Angles range over [0, 4pi) so sweeps exercise the
// double cover of half-integer spins explicitly.
struct RotationSpec {
    Eigen::Vector3d axis;  // unit norm
    double angle;          // radians
};

// Spin-s rotation operator exp(-i angle (ax sx + ay sy + az sz)), evaluated
// on the spectral decomposition of the generator. Unitary; for half-integer
// s a 2pi rotation gives -identity and 4pi gives +identity. Throws if the
// axis is not unit length.
ComplexMatrix rotation_operator(const RotationSpec& spec, Spin s);

// Axis uniform on the sphere (normalized standard normals), angle uniform in
// [0, 4pi). Deterministic in the seed; use mix64(seed, i) for sweeps.
RotationSpec random_rotation(std::uint64_t seed);

}  // namespace qbell
