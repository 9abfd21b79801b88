#include "qbell/lhv.hpp"

#include <stdexcept>

namespace qbell {

const std::vector<std::string>& lhv_labels() {
    static const std::vector<std::string> labels = {
        "A:D", "A:d", "A:U", "A:u", "A:Dd", "A:Uu",
        "B:D", "B:d", "B:U", "B:u", "B:Du", "B:Ud"};
    return labels;
}

LhvAssignment assignment_from_index(unsigned index) {
    const auto& labels = lhv_labels();
    if (index >= (1u << labels.size()))
        throw std::invalid_argument("assignment_from_index: index out of range");
    LhvAssignment a;
    for (std::size_t pos = 0; pos < labels.size(); ++pos) {
        const unsigned bit = static_cast<unsigned>(labels.size() - 1 - pos);
        a.values[labels[pos]] = ((index >> bit) & 1u) ? -1 : +1;
    }
    return a;
}

namespace {

int value_of(const LhvAssignment& a, const std::string& key) {
    const auto it = a.values.find(key);
    if (it == a.values.end())
        throw std::invalid_argument("LhvAssignment: missing label " + key);
    return it->second;
}

}  // namespace

bool constraint_satisfied(const LhvAssignment& a, const CorrelationConstraint& c) {
    int lhs = 1;
    int rhs = c.sign;
    for (const auto& label : c.alice) lhs *= value_of(a, "A:" + label);
    for (const auto& label : c.bob) rhs *= value_of(a, "B:" + label);
    return lhs == rhs;
}

int satisfied_count(const LhvAssignment& a,
                    const std::vector<CorrelationConstraint>& constraints) {
    int count = 0;
    for (const auto& c : constraints)
        if (constraint_satisfied(a, c)) ++count;
    return count;
}

LhvSearchReport exhaustive_search() {
    const auto constraints = nine_constraints();
    const unsigned total = 1u << lhv_labels().size();
    LhvSearchReport report{total, 0, -1, 0, {}};
    for (unsigned index = 0; index < total; ++index) {
        const LhvAssignment a = assignment_from_index(index);
        const int satisfied = satisfied_count(a, constraints);
        if (satisfied == static_cast<int>(constraints.size()))
            ++report.perfectly_satisfying;
        if (satisfied > report.max_satisfied) {
            report.max_satisfied = satisfied;
            report.witness_index = index;
            report.witness = a;
        }
    }
    return report;
}

ParityReport parity_argument() {
    ParityReport report{+1, +1, {}};
    for (const auto& label : lhv_labels()) report.per_label_counts[label] = 0;
    for (const auto& c : nine_constraints()) {
        for (const auto& label : c.alice) {
            const auto it = report.per_label_counts.find("A:" + label);
            if (it == report.per_label_counts.end())
                throw std::logic_error("parity_argument: constraint uses unknown label A:" + label);
            ++it->second;
        }
        for (const auto& label : c.bob) {
            const auto it = report.per_label_counts.find("B:" + label);
            if (it == report.per_label_counts.end())
                throw std::logic_error("parity_argument: constraint uses unknown label B:" + label);
            ++it->second;
        }
        report.rhs_sign *= c.sign;
    }
    // Each label occurring an even number of times makes the assignment-
    // dependent part of both side products cancel to +1, leaving only the
    // constraint signs on the right.
    for (const auto& [label, count] : report.per_label_counts)
        if (count != 2)
            throw std::logic_error("parity_argument: label " + label +
                                   " does not occur exactly twice");
    report.lhs_sign = +1;
    return report;
}

}  // namespace qbell
