#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_matrix.hpp"

#include "qbell/correlations.hpp"
#include "qbell/rng.hpp"
#include "qbell/rotations.hpp"

using namespace qbell;

namespace {

const StateVector& psi() {
    static const StateVector state = singlet(Spin::of(1.5));
    return state;
}

// Expectation recomputed from the joint outcome distribution, which is a
// different code path than the single inner product in correlation_value.
double expectation_from_distribution(const CorrelationConstraint& c,
                                     const ObservableMap& obs) {
    const MeasurementContext alice = context_for(c.alice, obs);
    const MeasurementContext bob = context_for(c.bob, obs);
    double sum = 0.0;
    for (const auto& ja : alice.joint) {
        for (const auto& jb : bob.joint) {
            const double p =
                psi().dot(tensor(ja.projector, jb.projector) * psi()).real();
            int product = 1;
            for (int a : ja.outcomes) product *= a;
            for (int b : jb.outcomes) product *= b;
            sum += p * product;
        }
    }
    return sum;
}

}  // namespace

TEST_CASE("the nine constraints have the golden structure") {
    const auto constraints = nine_constraints();
    REQUIRE(constraints.size() == 9);

    const std::vector<CorrelationConstraint> expected = {
        {1, {"D"}, {"D"}, -1},
        {2, {"d"}, {"d"}, -1},
        {3, {"U"}, {"U"}, 1},
        {4, {"u"}, {"u"}, -1},
        {5, {"Dd"}, {"D", "d"}, 1},
        {6, {"Uu"}, {"U", "u"}, -1},
        {7, {"D", "u"}, {"Du"}, 1},
        {8, {"U", "d"}, {"Ud"}, -1},
        {9, {"Dd", "Uu"}, {"Du", "Ud"}, 1},
    };
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(constraints[i].id == expected[i].id);
        CHECK(constraints[i].alice == expected[i].alice);
        CHECK(constraints[i].bob == expected[i].bob);
        CHECK(constraints[i].sign == expected[i].sign);
    }
}

TEST_CASE("every constraint expectation equals its sign exactly") {
    const ObservableMap obs = canonical_observables();
    for (const auto& c : nine_constraints()) {
        CAPTURE(c.id);
        const double value = correlation_value(psi(), c, obs);
        CHECK(std::abs(value - c.sign) <= 1e-12);
    }
}

TEST_CASE("correlation_value agrees with the naive-matrix oracle") {
    const ObservableMap obs = canonical_observables();
    const CorrelationConstraint c = nine_constraints()[8];

    // <psi| (Dd Uu) (x) (Du Ud) |psi> with every product and the inner
    // product done by the textbook loops.
    const oracle::Matrix alice =
        oracle::mul(oracle::from_eigen(resolve(obs, "Dd").matrix),
                    oracle::from_eigen(resolve(obs, "Uu").matrix));
    const oracle::Matrix bob =
        oracle::mul(oracle::from_eigen(resolve(obs, "Du").matrix),
                    oracle::from_eigen(resolve(obs, "Ud").matrix));
    const oracle::Vector v = oracle::from_eigen(psi());
    const oracle::Cx expected =
        oracle::inner(v, oracle::matvec(oracle::kron(alice, bob), v));

    CHECK(std::abs(expected.imag()) < kTol);
    CHECK(std::abs(correlation_value(psi(), c, obs) - expected.real()) < kTol);
}

TEST_CASE("a non-constrained pair has zero correlation, strictly inside (-1, 1)") {
    const ObservableMap obs = canonical_observables();
    const CorrelationConstraint mixed{0, {"D"}, {"d"}, 1};
    const double value = correlation_value(psi(), mixed, obs);
    CHECK(std::abs(value) < kTol);

    const oracle::Vector v = oracle::from_eigen(psi());
    const oracle::Matrix m =
        oracle::kron(oracle::from_eigen(resolve(obs, "D").matrix),
                     oracle::from_eigen(resolve(obs, "d").matrix));
    CHECK(std::abs(oracle::inner(v, oracle::matvec(m, v)).real() - value) < kTol);
}

TEST_CASE("correlation_value rejects non-commuting sides and unknown labels") {
    const ObservableMap obs = canonical_observables();
    const CorrelationConstraint bad_side{0, {"D", "U"}, {"D"}, 1};
    CHECK_THROWS_AS(correlation_value(psi(), bad_side, obs),
                    std::invalid_argument);

    const CorrelationConstraint bad_label{0, {"Q"}, {"D"}, 1};
    CHECK_THROWS_AS(correlation_value(psi(), bad_label, obs),
                    std::invalid_argument);
}

TEST_CASE("verify_perfect certifies all nine with no violating weight") {
    const ObservableMap obs = canonical_observables();
    for (const auto& c : nine_constraints()) {
        CAPTURE(c.id);
        const PerfectCorrelationReport report = verify_perfect(psi(), c, obs);
        CHECK(report.holds);
        CHECK(report.max_violating_probability <= 1e-12);
    }
}

TEST_CASE("a flipped sign is caught with half the weight on one violation") {
    const ObservableMap obs = canonical_observables();
    CorrelationConstraint flipped = nine_constraints()[0];
    flipped.sign = -flipped.sign;

    const PerfectCorrelationReport report = verify_perfect(psi(), flipped, obs);
    CHECK_FALSE(report.holds);
    // With the sign wrong every outcome violates; the heaviest one carries
    // probability 1/2 (two anti-aligned blocks of the singlet).
    CHECK(report.max_violating_probability ==
          doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("a product state passes the diagonal constraint but fails the swap one") {
    StateVector product = StateVector::Zero(16);
    product(3) = 1.0;  // |3/2, -3/2>

    const ObservableMap obs = canonical_observables();
    const auto constraints = nine_constraints();

    const PerfectCorrelationReport diag_report =
        verify_perfect(product, constraints[0], obs);
    CHECK(diag_report.holds);

    const PerfectCorrelationReport swap_report =
        verify_perfect(product, constraints[2], obs);
    CHECK_FALSE(swap_report.holds);
    CHECK(swap_report.max_violating_probability ==
          doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("expectation from the joint distribution matches correlation_value") {
    const ObservableMap obs = canonical_observables();
    for (const auto& c : nine_constraints()) {
        CAPTURE(c.id);
        CHECK(std::abs(expectation_from_distribution(c, obs) -
                       correlation_value(psi(), c, obs)) < 1e-10);
    }
}

TEST_CASE("rotating by the identity changes nothing") {
    const ObservableMap obs = canonical_observables();
    const ObservableMap same =
        rotated_observables(obs, ComplexMatrix::Identity(4, 4));
    for (const auto& [label, o] : obs) {
        CHECK(max_abs_diff(same.at(label).matrix, o.matrix) == 0.0);
    }
}

TEST_CASE("a 2 pi rotation conjugates by -identity, leaving observables fixed") {
    const ObservableMap obs = canonical_observables();
    const ComplexMatrix r = rotation_operator(
        RotationSpec{Eigen::Vector3d(0.0, 0.0, 1.0), 6.283185307179586},
        Spin::of(1.5));
    CHECK(max_abs_diff(r, -ComplexMatrix::Identity(4, 4)) < 1e-12);

    const ObservableMap rotated = rotated_observables(obs, r);
    for (const auto& [label, o] : obs) {
        CHECK(max_abs_diff(rotated.at(label).matrix, o.matrix) < 1e-12);
    }
}

TEST_CASE("rotated_constraints bundles the conjugated map with the same nine") {
    const ComplexMatrix r =
        rotation_operator(random_rotation(mix64(44, 0)), Spin::of(1.5));
    const RotatedConstraintSystem system = rotated_constraints(r);

    REQUIRE(system.constraints.size() == 9);
    const auto canonical = nine_constraints();
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(system.constraints[i].id == canonical[i].id);
        CHECK(system.constraints[i].sign == canonical[i].sign);
    }
    for (const auto& c : system.constraints) {
        CHECK(verify_perfect(psi(), c, system.observables,
                             kRotatedProbabilityFloor)
                  .holds);
    }
}

TEST_CASE("conjugation respects the product structure of the labels") {
    const ObservableMap obs = canonical_observables();
    const ComplexMatrix r =
        rotation_operator(random_rotation(mix64(41, 0)), Spin::of(1.5));
    const ObservableMap rotated = rotated_observables(obs, r);

    const auto product_of = [&](const char* x, const char* y) {
        return ComplexMatrix(rotated.at(x).matrix * rotated.at(y).matrix);
    };
    CHECK(max_abs_diff(rotated.at("Dd").matrix, product_of("D", "d")) < 1e-10);
    CHECK(max_abs_diff(rotated.at("Du").matrix, product_of("D", "u")) < 1e-10);
    CHECK(max_abs_diff(rotated.at("Ud").matrix, product_of("U", "d")) < 1e-10);
    CHECK(max_abs_diff(rotated.at("Uu").matrix, product_of("U", "u")) < 1e-10);
}

TEST_CASE("all nine constraints survive a hundred common rotations") {
    const ObservableMap obs = canonical_observables();
    const auto constraints = nine_constraints();
    for (int i = 0; i < 100; ++i) {
        const ComplexMatrix r = rotation_operator(
            random_rotation(mix64(42, i)), Spin::of(1.5));
        const ObservableMap rotated = rotated_observables(obs, r);
        for (const auto& c : constraints) {
            CAPTURE(i);
            CAPTURE(c.id);
            CHECK(std::abs(correlation_value(psi(), c, rotated) - c.sign) <
                  1e-10);
            const PerfectCorrelationReport report =
                verify_perfect(psi(), c, rotated, kRotatedProbabilityFloor);
            CHECK(report.holds);
        }
    }
}

TEST_CASE("rotated expectations equal expectations in the rotated state") {
    // <psi| (rAr+) (x) (rBr+) |psi> = <(r+ (x) r+) psi| A (x) B |(r+ (x) r+) psi>,
    // checked numerically for one constraint and rotation.
    const ObservableMap obs = canonical_observables();
    const ComplexMatrix r =
        rotation_operator(random_rotation(mix64(43, 0)), Spin::of(1.5));
    const ObservableMap rotated = rotated_observables(obs, r);

    const StateVector back_rotated =
        tensor(r.adjoint(), r.adjoint()) * psi();
    const CorrelationConstraint c = nine_constraints()[6];
    CHECK(std::abs(correlation_value(psi(), c, rotated) -
                   correlation_value(back_rotated, c, obs)) < 1e-10);
}

TEST_CASE("rotated_observables rejects non-unitary conjugators") {
    const ObservableMap obs = canonical_observables();
    CHECK_THROWS_AS(rotated_observables(obs, 2.0 * ComplexMatrix::Identity(4, 4)),
                    std::invalid_argument);
}
