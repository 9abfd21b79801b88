#include "qbell/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

namespace {

std::map<std::string, int> outcome_map(const MeasurementContext& ctx,
                                       const JointOutcome& joint) {
    std::map<std::string, int> values;
    for (std::size_t k = 0; k < ctx.observables.size(); ++k)
        values[ctx.observables[k].label] = joint.outcomes[k];
    return values;
}

}  // namespace

JointDistribution::JointDistribution(const StateVector& state,
                                     const MeasurementContext& alice,
                                     const MeasurementContext& bob)
    : bob_count_(static_cast<int>(bob.joint.size())) {
    for (const auto& a : alice.joint) alice_outcomes_.push_back(outcome_map(alice, a));
    for (const auto& b : bob.joint) bob_outcomes_.push_back(outcome_map(bob, b));

    double total = 0.0;
    for (const auto& a : alice.joint) {
        for (const auto& b : bob.joint) {
            const double p =
                std::real(state.dot(tensor(a.projector, b.projector) * state));
            probabilities_.push_back(std::max(p, 0.0));  // clip round-off negatives
            total += p;
        }
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::logic_error("JointDistribution: probabilities sum to " +
                               std::to_string(total) + ", not 1");
    double running = 0.0;
    for (double& p : probabilities_) {
        p /= total;
        running += p;
        cumulative_.push_back(running);
    }
}

int JointDistribution::sample(Rng& rng) const {
    const double u = rng.uniform01();
    for (std::size_t k = 0; k < cumulative_.size(); ++k)
        if (u < cumulative_[k]) return static_cast<int>(k);
    return static_cast<int>(cumulative_.size()) - 1;
}

RoundOutcome JointDistribution::outcome(int index) const {
    if (index < 0 || index >= size())
        throw std::out_of_range("JointDistribution: outcome index out of range");
    return {alice_outcomes_[index / bob_count_], bob_outcomes_[index % bob_count_],
            index};
}

RoundOutcome sample_round(const StateVector& state, const MeasurementContext& alice,
                          const MeasurementContext& bob, Rng& rng) {
    const JointDistribution dist(state, alice, bob);
    return dist.outcome(dist.sample(rng));
}

ExperimentStats run_experiment(const StateVector& state,
                               const std::vector<CorrelationConstraint>& constraints,
                               const ObservableMap& obs, long shots,
                               std::uint64_t seed) {
    if (shots < 0)
        throw std::invalid_argument("run_experiment: shots must be nonnegative");
    ExperimentStats stats{shots, {}};
    for (const auto& c : constraints) {
        const JointDistribution dist(state, context_for(c.alice, obs),
                                     context_for(c.bob, obs));
        // Agreement depends only on which projector pair fired.
        std::vector<bool> agrees(dist.size());
        for (int k = 0; k < dist.size(); ++k) {
            const RoundOutcome round = dist.outcome(k);
            int pa = 1;
            int pb = 1;
            for (const auto& label : c.alice) pa *= round.alice.at(label);
            for (const auto& label : c.bob) pb *= round.bob.at(label);
            agrees[k] = (pa == c.sign * pb);
        }
        Rng rng(mix64(seed, static_cast<std::uint64_t>(c.id)));
        ConstraintTally tally;
        for (long shot = 0; shot < shots; ++shot)
            ++(agrees[dist.sample(rng)] ? tally.agree : tally.disagree);
        tally.empirical_value =
            shots == 0 ? 0.0
                       : static_cast<double>(tally.agree - tally.disagree) /
                             static_cast<double>(shots);
        stats.per_constraint[c.id] = tally;
    }
    return stats;
}

}  // namespace qbell
