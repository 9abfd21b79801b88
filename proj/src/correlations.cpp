#include "qbell/correlations.hpp"

#include <cmath>
#include <stdexcept>

namespace qbell {

std::vector<CorrelationConstraint> nine_constraints() {
    return {
        {1, {"D"}, {"D"}, -1},
        {2, {"d"}, {"d"}, -1},
        {3, {"U"}, {"U"}, +1},
        {4, {"u"}, {"u"}, -1},
        {5, {"Dd"}, {"D", "d"}, +1},
        {6, {"Uu"}, {"U", "u"}, -1},
        {7, {"D", "u"}, {"Du"}, +1},
        {8, {"U", "d"}, {"Ud"}, -1},
        {9, {"Dd", "Uu"}, {"Du", "Ud"}, +1},
    };
}

namespace {

ComplexMatrix side_product(const std::vector<std::string>& labels,
                           const ObservableMap& obs) {
    if (labels.empty())
        throw std::invalid_argument("correlation_value: constraint side has no labels");
    std::vector<const DichotomicObservable*> side;
    side.reserve(labels.size());
    for (const auto& label : labels) side.push_back(&resolve(obs, label));
    for (std::size_t i = 0; i < side.size(); ++i)
        for (std::size_t j = i + 1; j < side.size(); ++j)
            if (!commute(*side[i], *side[j]))
                throw std::invalid_argument("correlation_value: labels do not commute: " +
                                            side[i]->label + ", " + side[j]->label);
    ComplexMatrix product = side[0]->matrix;
    for (std::size_t k = 1; k < side.size(); ++k) product = product * side[k]->matrix;
    return product;
}

int outcome_product(const std::vector<int>& outcomes) {
    int product = 1;
    for (int o : outcomes) product *= o;
    return product;
}

}  // namespace

double correlation_value(const StateVector& state, const CorrelationConstraint& c,
                         const ObservableMap& obs) {
    const ComplexMatrix op = tensor(side_product(c.alice, obs), side_product(c.bob, obs));
    if (state.size() != op.rows())
        throw std::invalid_argument("correlation_value: state dimension mismatch");
    const Complex value = state.dot(op * state);
    if (std::abs(value.imag()) > kTol)
        throw std::logic_error("correlation_value: expectation has a nonreal part");
    return value.real();
}

PerfectCorrelationReport verify_perfect(const StateVector& state,
                                        const CorrelationConstraint& c,
                                        const ObservableMap& obs,
                                        double probability_floor) {
    const MeasurementContext alice = context_for(c.alice, obs);
    const MeasurementContext bob = context_for(c.bob, obs);
    double max_violating = 0.0;
    double total = 0.0;
    for (const auto& a : alice.joint) {
        const int pa = outcome_product(a.outcomes);
        for (const auto& b : bob.joint) {
            const double p = std::real(state.dot(tensor(a.projector, b.projector) * state));
            total += p;
            if (pa != c.sign * outcome_product(b.outcomes))
                max_violating = std::max(max_violating, p);
        }
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::logic_error("verify_perfect: joint probabilities do not sum to 1");
    return {max_violating <= probability_floor, max_violating};
}

ObservableMap rotated_observables(const ObservableMap& obs, const ComplexMatrix& r) {
    if (!is_unitary(r))
        throw std::invalid_argument("rotated_observables: rotation is not unitary");
    ObservableMap rotated;
    for (const auto& [label, o] : obs) {
        if (o.matrix.rows() != r.rows())
            throw std::invalid_argument("rotated_observables: dimension mismatch for " + label);
        rotated.emplace(label, DichotomicObservable{label, r * o.matrix * r.adjoint()});
    }
    return rotated;
}

RotatedConstraintSystem rotated_constraints(const ComplexMatrix& r) {
    return RotatedConstraintSystem{
        rotated_observables(canonical_observables(), r), nine_constraints()};
}

}  // namespace qbell
