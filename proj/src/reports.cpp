#include "qbell/reports.hpp"

#include <cstdio>
#include <sstream>

namespace qbell {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::string joined;
    for (const auto& label : labels) {
        if (!joined.empty()) {
            joined += ' ';
        }
        joined += label;
    }
    return joined;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

ConstraintReport make_constraint_report(const StateVector& state,
                                        const CorrelationConstraint& c,
                                        const ObservableMap& obs,
                                        double probability_floor) {
    const double value = correlation_value(state, c, obs);
    const PerfectCorrelationReport perfect =
        verify_perfect(state, c, obs, probability_floor);
    return ConstraintReport{c.id,
                            c.alice,
                            c.bob,
                            c.sign,
                            value,
                            perfect.holds,
                            perfect.max_violating_probability};
}

nlohmann::json to_json(const ConstraintReport& report) {
    return nlohmann::json{
        {"id", report.id},
        {"alice", report.alice},
        {"bob", report.bob},
        {"sign", report.sign},
        {"value", report.value},
        {"holds", report.holds},
        {"max_violating_probability", report.max_violating_probability},
    };
}

nlohmann::json to_json(const LhvSearchReport& report) {
    nlohmann::json witness = nlohmann::json::object();
    for (const auto& [label, value] : report.witness.values) {
        witness[label] = value;
    }
    return nlohmann::json{
        {"total", report.total_assignments},
        {"perfect", report.perfectly_satisfying},
        {"max_satisfied", report.max_satisfied},
        {"witness", witness},
    };
}

nlohmann::json to_json(const ParityReport& report) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [label, count] : report.per_label_counts) {
        counts[label] = count;
    }
    return nlohmann::json{
        {"lhs_sign", report.lhs_sign},
        {"rhs_sign", report.rhs_sign},
        {"per_label_counts", counts},
    };
}

nlohmann::json to_json(const ExperimentStats& stats) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [id, tally] : stats.per_constraint) {
        rows.push_back(nlohmann::json{
            {"id", id},
            {"shots", stats.shots},
            {"agree", tally.agree},
            {"disagree", tally.disagree},
            {"empirical_value", tally.empirical_value},
            {"no_data", stats.shots == 0},
        });
    }
    return nlohmann::json{{"shots", stats.shots}, {"constraints", rows}};
}

void write_constraints_csv(std::ostream& out,
                           const std::vector<ConstraintReport>& reports) {
    out << "id,alice,bob,sign,value,holds,max_violating_probability\n";
    for (const auto& r : reports) {
        out << r.id << ',' << join_labels(r.alice) << ',' << join_labels(r.bob)
            << ',' << r.sign << ',' << format_double(r.value) << ','
            << (r.holds ? "true" : "false") << ','
            << format_double(r.max_violating_probability) << '\n';
    }
}

void write_experiment_csv(std::ostream& out, const ExperimentStats& stats) {
    out << "id,shots,agree,disagree,empirical_value\n";
    for (const auto& [id, tally] : stats.per_constraint) {
        out << id << ',' << stats.shots << ',' << tally.agree << ','
            << tally.disagree << ',' << format_double(tally.empirical_value)
            << '\n';
    }
}

void write_lhv_csv(std::ostream& out, const LhvSearchReport& search,
                   const ParityReport& parity) {
    out << "total,perfect,max_satisfied,lhs_sign,rhs_sign,witness\n";
    std::ostringstream witness;
    bool first = true;
    for (const auto& [label, value] : search.witness.values) {
        if (!first) {
            witness << ' ';
        }
        first = false;
        witness << label << '=' << value;
    }
    out << search.total_assignments << ',' << search.perfectly_satisfying << ','
        << search.max_satisfied << ',' << parity.lhs_sign << ','
        << parity.rhs_sign << ',' << witness.str() << '\n';
}

}  // namespace qbell
