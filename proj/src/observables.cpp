#include "qbell/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qbell {

bool is_dichotomic(const DichotomicObservable& o, double tol) {
    if (!is_hermitian(o.matrix, tol)) return false;
    const auto n = o.matrix.rows();
    return max_abs_diff(o.matrix * o.matrix, ComplexMatrix::Identity(n, n)) <= tol;
}

ObservableMap canonical_observables() {
    ComplexMatrix D = ComplexMatrix::Zero(4, 4);
    D(0, 0) = 1.0;
    D(1, 1) = 1.0;
    D(2, 2) = -1.0;
    D(3, 3) = -1.0;

    ComplexMatrix d = ComplexMatrix::Zero(4, 4);
    d(0, 0) = 1.0;
    d(1, 1) = -1.0;
    d(2, 2) = 1.0;
    d(3, 3) = -1.0;

    ComplexMatrix U = ComplexMatrix::Zero(4, 4);
    U(0, 2) = 1.0;
    U(1, 3) = 1.0;
    U(2, 0) = 1.0;
    U(3, 1) = 1.0;

    ComplexMatrix u = ComplexMatrix::Zero(4, 4);
    u(0, 1) = 1.0;
    u(1, 0) = 1.0;
    u(2, 3) = 1.0;
    u(3, 2) = 1.0;

    ObservableMap map;
    auto add = [&map](const std::string& label, ComplexMatrix matrix) {
        DichotomicObservable o{label, std::move(matrix)};
        if (!is_dichotomic(o))
            throw std::logic_error("canonical_observables: " + label +
                                   " is not a Hermitian involution");
        map.emplace(label, std::move(o));
    };
    auto add_product = [&add](const std::string& label, const ComplexMatrix& x,
                              const ComplexMatrix& y) {
        if (max_abs_diff(x * y, y * x) > kTol)
            throw std::logic_error("canonical_observables: factors of " + label +
                                   " do not commute");
        add(label, x * y);
    };

    add("D", D);
    add("d", d);
    add("U", U);
    add("u", u);
    add_product("Dd", D, d);
    add_product("Du", D, u);
    add_product("Ud", U, d);
    add_product("Uu", U, u);
    return map;
}

bool commute(const DichotomicObservable& a, const DichotomicObservable& b,
             double tol) {
    if (a.matrix.rows() != b.matrix.rows())
        throw std::invalid_argument("commute: dimension mismatch between " +
                                    a.label + " and " + b.label);
    return max_abs_diff(a.matrix * b.matrix, b.matrix * a.matrix) <= tol;
}

const DichotomicObservable& resolve(const ObservableMap& obs,
                                    const std::string& label) {
    const auto it = obs.find(label);
    if (it == obs.end())
        throw std::invalid_argument("unknown observable label: " + label);
    return it->second;
}

namespace {

// Post-construction sanity: orthogonal idempotent projectors summing to the
// identity, each reproducing every observable's outcome on its range.
void validate_context(const MeasurementContext& ctx) {
    const auto n = ctx.observables.front().matrix.rows();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < ctx.joint.size(); ++i) {
        const auto& ji = ctx.joint[i];
        sum += ji.projector;
        if (max_abs_diff(ji.projector * ji.projector, ji.projector) > kTol)
            throw std::logic_error("build_context: joint projector is not idempotent");
        for (std::size_t j = i + 1; j < ctx.joint.size(); ++j) {
            const ComplexMatrix cross = ji.projector * ctx.joint[j].projector;
            if (max_abs(cross) > kTol)
                throw std::logic_error("build_context: joint projectors are not orthogonal");
        }
        for (std::size_t k = 0; k < ctx.observables.size(); ++k) {
            const ComplexMatrix lhs = ctx.observables[k].matrix * ji.projector;
            const ComplexMatrix rhs = static_cast<double>(ji.outcomes[k]) * ji.projector;
            if (max_abs_diff(lhs, rhs) > kTol)
                throw std::logic_error("build_context: projector does not reproduce outcome of " +
                                       ctx.observables[k].label);
        }
    }
    if (max_abs_diff(sum, ComplexMatrix::Identity(n, n)) > kTol)
        throw std::logic_error("build_context: joint projectors do not sum to identity");
}

}  // namespace

MeasurementContext build_context(const std::vector<DichotomicObservable>& observables) {
    if (observables.empty())
        throw std::invalid_argument("build_context: observable list is empty");
    for (std::size_t i = 0; i < observables.size(); ++i)
        for (std::size_t j = i + 1; j < observables.size(); ++j)
            if (!commute(observables[i], observables[j]))
                throw std::invalid_argument("build_context: observables do not commute: " +
                                            observables[i].label + ", " +
                                            observables[j].label);

    // +-1 eigenprojectors per observable, eigenvalue ascending.
    std::vector<std::vector<std::pair<int, ComplexMatrix>>> spectra;
    for (const auto& o : observables) {
        if (!is_dichotomic(o))
            throw std::invalid_argument("build_context: " + o.label +
                                        " is not a Hermitian involution");
        std::vector<std::pair<int, ComplexMatrix>> spaces;
        for (const auto& es : hermitian_eigensystem(o.matrix)) {
            const int outcome = es.eigenvalue < 0.0 ? -1 : 1;
            if (std::abs(es.eigenvalue - outcome) > kEigenvalueClusterTol)
                throw std::logic_error("build_context: eigenvalue of " + o.label +
                                       " is not +-1");
            spaces.emplace_back(outcome, es.projector);
        }
        spectra.push_back(std::move(spaces));
    }

    MeasurementContext ctx{observables, {}};
    std::vector<std::size_t> pick(observables.size(), 0);
    while (true) {
        ComplexMatrix projector = spectra[0][pick[0]].second;
        std::vector<int> outcomes{spectra[0][pick[0]].first};
        for (std::size_t k = 1; k < spectra.size(); ++k) {
            projector = projector * spectra[k][pick[k]].second;
            outcomes.push_back(spectra[k][pick[k]].first);
        }
        // The product of commuting projectors is the intersection projector;
        // its trace is the (integer) rank, so > 1/2 means nonzero.
        if (projector.trace().real() > 0.5)
            ctx.joint.push_back({std::move(outcomes), std::move(projector)});

        // Advance the mixed-radix counter, last observable fastest.
        std::size_t k = spectra.size();
        while (k > 0) {
            --k;
            if (++pick[k] < spectra[k].size()) break;
            pick[k] = 0;
            if (k == 0) {
                validate_context(ctx);
                return ctx;
            }
        }
    }
}

MeasurementContext context_for(const std::vector<std::string>& labels,
                               const ObservableMap& obs) {
    std::vector<DichotomicObservable> list;
    list.reserve(labels.size());
    for (const auto& label : labels) list.push_back(resolve(obs, label));
    return build_context(list);
}

SzReadout sz_readout(double sz_outcome) {
    if (sz_outcome == 1.5) return {+1, +1};
    if (sz_outcome == 0.5) return {+1, -1};
    if (sz_outcome == -0.5) return {-1, +1};
    if (sz_outcome == -1.5) return {-1, -1};
    throw std::invalid_argument("sz_readout: outcome must be one of 3/2, 1/2, -1/2, -3/2");
}

}  // namespace qbell
