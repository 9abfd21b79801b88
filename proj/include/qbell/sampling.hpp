#pragma once

#include "qbell/correlations.hpp"
#include "qbell/rng.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbell {

// Result of one measurement round: the +-1 outcome per observable on each
// side, plus which joint projector pair fired.
struct RoundOutcome {
    std::map<std::string, int> alice;
    std::map<std::string, int> bob;
    int joint_index;
};

// Born distribution over pairs of joint projectors for fixed per-particle
// contexts. Probabilities are renormalized defensively; a total further than
// 1e-9 from one signals a context construction bug and throws.
class JointDistribution {
public:
    JointDistribution(const StateVector& state, const MeasurementContext& alice,
                      const MeasurementContext& bob);

    // Inverse-CDF draw; one uniform per call.
    int sample(Rng& rng) const;

    RoundOutcome outcome(int index) const;

    int size() const { return static_cast<int>(probabilities_.size()); }
    const std::vector<double>& probabilities() const { return probabilities_; }

private:
    std::vector<std::map<std::string, int>> alice_outcomes_;
    std::vector<std::map<std::string, int>> bob_outcomes_;
    std::vector<double> probabilities_;  // normalized, indexed a * bob_count + b
    std::vector<double> cumulative_;
    int bob_count_;
};

// Draws one joint outcome with Born probability <state| P_a (x) P_b |state>.
// The caller owns the RNG, so fixed seeds reproduce outcome streams exactly.
RoundOutcome sample_round(const StateVector& state, const MeasurementContext& alice,
                          const MeasurementContext& bob, Rng& rng);

struct ConstraintTally {
    long agree = 0;
    long disagree = 0;
    double empirical_value = 0.0;  // (agree - disagree) / shots; 0 when shots == 0
};

struct ExperimentStats {
    long shots = 0;
    std::map<int, ConstraintTally> per_constraint;
};

// Runs `shots` rounds per constraint, with one deterministic RNG substream
// per constraint derived from the master seed via mix64(seed, id). A round
// agrees when the product of Alice's results equals sign times the product
// of Bob's.
ExperimentStats run_experiment(const StateVector& state,
                               const std::vector<CorrelationConstraint>& constraints,
                               const ObservableMap& obs, long shots,
                               std::uint64_t seed);

}  // namespace qbell
