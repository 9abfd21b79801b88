#pragma once

#include "qbell/observables.hpp"
#include "qbell/states.hpp"

namespace qbell {

// Probability floor for rotated-observable checks. Rotated projectors carry
// eigensolver round-off, so this sits two orders above kTol while staying
// eight orders below any genuine outcome probability.
inline constexpr double kRotatedProbabilityFloor = 1e-10;

// One perfect-correlation identity: the product of Alice's results equals
// sign times the product of Bob's results.
struct CorrelationConstraint {
    int id;                          // 1..9
    std::vector<std::string> alice;  // one or two labels
    std::vector<std::string> bob;
    int sign;                        // -1 or +1
};

// The nine identities in order; signs -, -, +, -, +, -, +, -, +.
std::vector<CorrelationConstraint> nine_constraints();

// Re <state| (prod of Alice matrices) (x) (prod of Bob matrices) |state>.
// Each side's labels must pairwise commute so the side product is Hermitian;
// the imaginary part of the expectation must vanish to tolerance (asserted).
double correlation_value(const StateVector& state, const CorrelationConstraint& c,
                         const ObservableMap& obs);

struct PerfectCorrelationReport {
    bool holds;
    double max_violating_probability;
};

// Distributional check, strictly stronger than expectation == sign: every
// joint outcome carrying probability above `probability_floor` must satisfy
// the identity. The floor separates true zeros from round-off; the genuine
// nonzero probabilities in this system are all at least 1/4 before rotation.
PerfectCorrelationReport verify_perfect(const StateVector& state,
                                        const CorrelationConstraint& c,
                                        const ObservableMap& obs,
                                        double probability_floor = kTol);

// Conjugates every observable by a common unitary: O -> r O r^dagger. The
// nine constraints apply unchanged to the rotated set, and conjugation
// respects products, so rotated product labels stay products of the rotated
// generators. Throws if r is not unitary.
ObservableMap rotated_observables(const ObservableMap& obs, const ComplexMatrix& r);

// The constraint system as seen by two observers whose devices share a
// common rotation: conjugated canonical observables, identical constraint
// structure and signs.
struct RotatedConstraintSystem {
    ObservableMap observables;
    std::vector<CorrelationConstraint> constraints;
};

RotatedConstraintSystem rotated_constraints(const ComplexMatrix& r);

}  // namespace qbell
