#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbell/observables.hpp"
#include "qbell/rng.hpp"
#include "qbell/rotations.hpp"

#include <cmath>
#include <numbers>

using namespace qbell;

namespace {

constexpr double kPi = std::numbers::pi;

RotationSpec z_axis(double angle) {
    return RotationSpec{Eigen::Vector3d(0.0, 0.0, 1.0), angle};
}

}  // namespace

TEST_CASE("zero angle is the identity for any axis") {
    const RotationSpec spec{Eigen::Vector3d(1.0, 0.0, 0.0), 0.0};
    CHECK(max_abs_diff(rotation_operator(spec, Spin::of(1.5)),
                       ComplexMatrix::Identity(4, 4)) < kTol);
}

TEST_CASE("the double cover shows up for half-integer spin") {
    const Spin s = Spin::of(1.5);
    CHECK(max_abs_diff(rotation_operator(z_axis(2.0 * kPi), s),
                       -ComplexMatrix::Identity(4, 4)) < kTol);
    CHECK(max_abs_diff(rotation_operator(z_axis(4.0 * kPi), s),
                       ComplexMatrix::Identity(4, 4)) < kTol);

    // Same angles around a skew axis, to not privilege the diagonal case.
    const Eigen::Vector3d axis = Eigen::Vector3d(1.0, 2.0, -1.0).normalized();
    CHECK(max_abs_diff(rotation_operator(RotationSpec{axis, 2.0 * kPi}, s),
                       -ComplexMatrix::Identity(4, 4)) < 1e-10);
    CHECK(max_abs_diff(rotation_operator(RotationSpec{axis, 4.0 * kPi}, s),
                       ComplexMatrix::Identity(4, 4)) < 1e-10);
}

TEST_CASE("integer spin is single-valued: 2 pi is already the identity") {
    const Spin s = Spin::of(1.0);
    CHECK(max_abs_diff(rotation_operator(z_axis(2.0 * kPi), s),
                       ComplexMatrix::Identity(3, 3)) < 1e-10);
}

TEST_CASE("z-axis rotations have the closed-form phases") {
    const double theta = 0.9;
    const ComplexMatrix r = rotation_operator(z_axis(theta), Spin::of(1.5));
    const double ms[] = {1.5, 0.5, -0.5, -1.5};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Complex expected =
                i == j ? std::exp(Complex(0.0, -theta * ms[i])) : Complex(0.0);
            CHECK(std::abs(r(i, j) - expected) < kTol);
        }
    }
}

TEST_CASE("rotation operators are unitary with unimodular determinant") {
    for (int twice_s = 1; twice_s <= 3; ++twice_s) {
        for (int i = 0; i < 100; ++i) {
            const RotationSpec spec = random_rotation(mix64(5, i));
            const ComplexMatrix r = rotation_operator(spec, Spin(twice_s));
            CHECK(is_unitary(r, 1e-12));
            CHECK(std::abs(std::abs(r.determinant()) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("same-axis rotations compose additively") {
    const Eigen::Vector3d axis = Eigen::Vector3d(0.3, -1.0, 0.2).normalized();
    const Spin s = Spin::of(1.5);
    const ComplexMatrix r1 = rotation_operator(RotationSpec{axis, 0.7}, s);
    const ComplexMatrix r2 = rotation_operator(RotationSpec{axis, 1.9}, s);
    const ComplexMatrix r12 = rotation_operator(RotationSpec{axis, 2.6}, s);
    CHECK(max_abs_diff(r1 * r2, r12) < 1e-10);
    CHECK(max_abs_diff(r1 * r2, r2 * r1) < 1e-10);
}

TEST_CASE("conjugation by a rotation preserves the dichotomic property") {
    const ObservableMap obs = canonical_observables();
    const ComplexMatrix r =
        rotation_operator(random_rotation(mix64(6, 0)), Spin::of(1.5));
    for (const auto& [label, o] : obs) {
        const DichotomicObservable rotated{label, r * o.matrix * r.adjoint()};
        CAPTURE(label);
        CHECK(is_dichotomic(rotated, 1e-10));
    }
}

TEST_CASE("random_rotation is deterministic and seed-sensitive") {
    const RotationSpec a = random_rotation(99);
    const RotationSpec b = random_rotation(99);
    CHECK(a.axis == b.axis);
    CHECK(a.angle == b.angle);

    const RotationSpec c = random_rotation(100);
    CHECK((a.axis != c.axis || a.angle != c.angle));
}

TEST_CASE("random rotations cover the sphere and the full angle range") {
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    double min_angle = 1e9;
    double max_angle = -1e9;
    const int samples = 1000;
    for (int i = 0; i < samples; ++i) {
        const RotationSpec spec = random_rotation(mix64(7, i));
        CHECK(std::abs(spec.axis.norm() - 1.0) < kTol);
        CHECK(spec.angle >= 0.0);
        CHECK(spec.angle < 4.0 * kPi);
        mean += spec.axis;
        min_angle = std::min(min_angle, spec.angle);
        max_angle = std::max(max_angle, spec.angle);
    }
    mean /= samples;
    // A uniform axis distribution has zero mean; 1000 samples put each
    // component within a few times 1/sqrt(3000) of it.
    CHECK(mean.norm() < 0.1);
    // The angle span actually exercises the double-cover range.
    CHECK(min_angle < 2.0);
    CHECK(max_angle > 10.0);
}

TEST_CASE("rotation_operator rejects non-unit axes") {
    CHECK_THROWS_AS(rotation_operator(
                        RotationSpec{Eigen::Vector3d(1.0, 1.0, 0.0), 1.0},
                        Spin::of(1.5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(rotation_operator(
                        RotationSpec{Eigen::Vector3d::Zero(), 1.0},
                        Spin::of(1.5)),
                    std::invalid_argument);
}
