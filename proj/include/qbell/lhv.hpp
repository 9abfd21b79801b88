#pragma once

#include "qbell/correlations.hpp"

#include <map>
#include <string>
#include <vector>

namespace qbell {

// The 12 classical variables, six per particle, in enumeration order. Note
// that Alice's list carries Dd and Uu while Bob's carries Du and Ud: only
// the labels actually appearing in the nine constraints are variables, and
// A:Dd is an independent value, not the product A:D * A:d.
const std::vector<std::string>& lhv_labels();

// A preexisting +-1 value for each of the 12 local observables.
struct LhvAssignment {
    std::map<std::string, int> values;
};

// Assignment number `index` in [0, 4096): bit (11 - position) set means the
// label at `position` carries -1, so bit 0 flips the last label and index 0
// is the all-+1 assignment.
LhvAssignment assignment_from_index(unsigned index);

// Classical reading of a constraint over preexisting values: the product of
// the A:-prefixed values equals sign times the product of the B:-prefixed
// values. Throws if a label is missing from the assignment.
bool constraint_satisfied(const LhvAssignment& a, const CorrelationConstraint& c);

int satisfied_count(const LhvAssignment& a,
                    const std::vector<CorrelationConstraint>& constraints);

struct LhvSearchReport {
    long total_assignments;
    long perfectly_satisfying;
    int max_satisfied;
    unsigned witness_index;  // lowest index achieving max_satisfied
    LhvAssignment witness;
};

// Checks all 2^12 assignments against the nine constraints. No assignment
// satisfies all nine; the best possible satisfies eight.
LhvSearchReport exhaustive_search();

struct ParityReport {
    int lhs_sign;
    int rhs_sign;
    std::map<std::string, int> per_label_counts;
};

// The structural core of the impossibility. Every label occurs exactly twice
// across the constraint sides it appears on, so for any assignment the nine
// left-hand sides multiply to +1 while the right-hand sides multiply to the
// product of the nine signs, which is -1.
ParityReport parity_argument();

}  // namespace qbell
