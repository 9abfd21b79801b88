#pragma once

#include "qbell/reports.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qbell {

enum class OutputFormat { json, csv };

// One batch run, fully determined by these fields. Reports go to `out`
// (stdout or the file named by output_path); progress and diagnostics go to
// the separate diag stream so machine-read output stays clean.
struct RunConfig {
    std::uint64_t seed = 0;
    long shots = 100000;
    int rotations = 100;
    std::optional<Eigen::Vector3d> axis;
    std::optional<double> angle;
    OutputFormat format = OutputFormat::json;
    std::optional<std::string> output_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Checks the nine perfect correlations on the spin-3/2 singlet and prints
// one report per constraint. Exit 0 iff every constraint holds.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& diag);

// Same, for an explicit constraint list. cmd_verify uses the canonical nine;
// this overload lets tests drive the failure path with a broken constraint.
int cmd_verify(const RunConfig& config,
               const std::vector<CorrelationConstraint>& constraints,
               std::ostream& out, std::ostream& diag);

// Exhausts the 4096 classical assignments and prints the search report plus
// the parity bookkeeping. Exit 0 iff no assignment satisfies all nine.
int cmd_lhv(const RunConfig& config, std::ostream& out, std::ostream& diag);

// Re-verifies the nine constraints under common rotations of all observables:
// either `rotations` seeded random axis/angle pairs, or one explicit rotation
// when both --axis and --angle are given. Exit 0 iff the state invariance
// defect and every rotated constraint stay within tolerance.
int cmd_rotate_sweep(const RunConfig& config, std::ostream& out,
                     std::ostream& diag);

// Monte Carlo check: samples `shots` measurement rounds per constraint from
// the Born distribution and prints agreement tallies.
int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace qbell
