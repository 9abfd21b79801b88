#pragma once

#include "qbell/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbell {

// A labeled Hermitian involution: spectrum contained in {-1, +1}.
struct DichotomicObservable {
    std::string label;
    ComplexMatrix matrix;
};

// Keyed by label; the labels are the stable identifiers used in constraint
// definitions, CLI output and serialized reports.
using ObservableMap = std::map<std::string, DichotomicObservable>;

bool is_dichotomic(const DichotomicObservable& o, double tol = kTol);

// The four generators on the four-dimensional single-particle space plus
// their pairwise products:
//
//   D = diag(1, 1, -1, -1)          d = diag(1, -1, 1, -1)
//   U swaps basis vectors 1<->3 and 2<->4; u swaps 1<->2 and 3<->4
//   Dd, Du, Ud, Uu are the matrix products (each pair of factors commutes,
//   which is asserted, so the order does not matter)
ObservableMap canonical_observables();

// True iff ab - ba vanishes to tolerance. Throws on dimension mismatch.
bool commute(const DichotomicObservable& a, const DichotomicObservable& b,
             double tol = kTol);

const DichotomicObservable& resolve(const ObservableMap& obs,
                                    const std::string& label);

// One simultaneous outcome of a commuting set: the +-1 result per observable
// and the projector onto the joint eigenspace.
struct JointOutcome {
    std::vector<int> outcomes;
    ComplexMatrix projector;
};

// A list of mutually commuting observables together with their joint spectral
// projectors. Outcome combinations of rank zero are omitted, so the listed
// projectors are nonzero, mutually orthogonal and sum to the identity.
struct MeasurementContext {
    std::vector<DichotomicObservable> observables;
    std::vector<JointOutcome> joint;
};

// Intersects the +-1 eigenprojectors across the list (as products of
// commuting projectors). Joint outcomes are enumerated with each observable's
// eigenvalues ascending, last observable fastest. Throws
// std::invalid_argument naming the offending pair if two observables fail to
// commute; the context invariants are validated before returning.
MeasurementContext build_context(const std::vector<DichotomicObservable>& observables);

// Builds the context for a list of labels resolved in `obs`.
MeasurementContext context_for(const std::vector<std::string>& labels,
                               const ObservableMap& obs);

// Readout of the commuting diagonal pair {D, d} from a single spin-z
// measurement: D is +1 on m in {3/2, 1/2}, d is +1 on m in {3/2, -1/2}.
struct SzReadout {
    int r_D;
    int r_d;
};

// Valid outcomes are exactly 3/2, 1/2, -1/2, -3/2 (all exactly representable,
// so the match is exact). Anything else throws.
SzReadout sz_readout(double sz_outcome);

}  // namespace qbell
