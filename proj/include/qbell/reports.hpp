#pragma once

#include "qbell/correlations.hpp"
#include "qbell/lhv.hpp"
#include "qbell/sampling.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace qbell {

// Floats in text output are printed with 17 significant digits so they
// round-trip through parsing exactly.
std::string format_double(double value);

// Everything reported about one constraint on one state: the exact
// expectation, the distributional check, and the constraint itself.
struct ConstraintReport {
    int id;
    std::vector<std::string> alice;
    std::vector<std::string> bob;
    int sign;
    double value;
    bool holds;
    double max_violating_probability;
};

ConstraintReport make_constraint_report(const StateVector& state,
                                        const CorrelationConstraint& c,
                                        const ObservableMap& obs,
                                        double probability_floor = kTol);

nlohmann::json to_json(const ConstraintReport& report);
nlohmann::json to_json(const LhvSearchReport& report);
nlohmann::json to_json(const ParityReport& report);
nlohmann::json to_json(const ExperimentStats& stats);

// CSV writers; header row first, label lists joined with spaces.
void write_constraints_csv(std::ostream& out,
                           const std::vector<ConstraintReport>& reports);
void write_experiment_csv(std::ostream& out, const ExperimentStats& stats);
void write_lhv_csv(std::ostream& out, const LhvSearchReport& search,
                   const ParityReport& parity);

}  // namespace qbell
