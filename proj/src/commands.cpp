#include "qbell/commands.hpp"

#include "qbell/lhv.hpp"
#include "qbell/rotations.hpp"

#include <vector>

namespace qbell {

namespace {

Spin system_spin() { return Spin::of(1.5); }

void print_json(std::ostream& out, const nlohmann::json& j) {
    out << j.dump(2) << '\n';
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    return cmd_verify(config, nine_constraints(), out, diag);
}

int cmd_verify(const RunConfig& config,
               const std::vector<CorrelationConstraint>& constraints,
               std::ostream& out, std::ostream& diag) {
    const StateVector psi = singlet(system_spin());
    const ObservableMap obs = canonical_observables();

    std::vector<ConstraintReport> reports;
    reports.reserve(constraints.size());
    for (const auto& c : constraints) {
        reports.push_back(make_constraint_report(psi, c, obs));
    }

    if (config.format == OutputFormat::json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : reports) {
            rows.push_back(to_json(r));
        }
        print_json(out, rows);
    } else {
        write_constraints_csv(out, reports);
    }

    int exit_code = kExitOk;
    for (const auto& r : reports) {
        if (!r.holds) {
            diag << "constraint " << r.id
                 << " failed: max violating probability "
                 << format_double(r.max_violating_probability) << '\n';
            exit_code = kExitVerificationFailed;
        }
    }
    return exit_code;
}

int cmd_lhv(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    const LhvSearchReport search = exhaustive_search();
    const ParityReport parity = parity_argument();

    if (config.format == OutputFormat::json) {
        nlohmann::json j = to_json(search);
        j["parity"] = to_json(parity);
        print_json(out, j);
    } else {
        write_lhv_csv(out, search, parity);
    }

    if (search.perfectly_satisfying != 0) {
        diag << "found " << search.perfectly_satisfying
             << " assignments satisfying all nine constraints\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int cmd_rotate_sweep(const RunConfig& config, std::ostream& out,
                     std::ostream& diag) {
    const bool explicit_rotation = config.axis.has_value() || config.angle.has_value();
    std::vector<RotationSpec> specs;
    if (explicit_rotation) {
        if (!config.axis.has_value() || !config.angle.has_value()) {
            diag << "an explicit rotation needs both --axis and --angle\n";
            return kExitUsage;
        }
        const double norm = config.axis->norm();
        if (norm < kTol) {
            diag << "rotation axis must be nonzero\n";
            return kExitUsage;
        }
        specs.push_back(RotationSpec{*config.axis / norm, *config.angle});
    } else {
        if (config.rotations < 1) {
            diag << "need --rotations >= 1 or an explicit --axis/--angle\n";
            return kExitUsage;
        }
        specs.reserve(static_cast<std::size_t>(config.rotations));
        for (int i = 0; i < config.rotations; ++i) {
            specs.push_back(
                random_rotation(mix64(config.seed, static_cast<std::uint64_t>(i))));
        }
    }

    const StateVector psi = singlet(system_spin());
    const ObservableMap obs = canonical_observables();
    const std::vector<CorrelationConstraint> constraints = nine_constraints();

    bool all_hold = true;
    double worst_defect = 0.0;
    double worst_violating = 0.0;

    nlohmann::json json_rotations = nlohmann::json::array();
    if (config.format == OutputFormat::csv) {
        out << "rotation,axis_x,axis_y,axis_z,angle,invariance_defect,"
               "constraint_id,value,holds,max_violating_probability\n";
    }

    for (std::size_t i = 0; i < specs.size(); ++i) {
        const RotationSpec& spec = specs[i];
        const ComplexMatrix r = rotation_operator(spec, system_spin());
        const double defect = invariance_defect(psi, r);
        worst_defect = std::max(worst_defect, defect);
        if (defect > kRotatedProbabilityFloor) {
            diag << "rotation " << i << ": invariance defect "
                 << format_double(defect) << " exceeds tolerance\n";
            all_hold = false;
        }

        const ObservableMap rotated = rotated_observables(obs, r);
        std::vector<ConstraintReport> reports;
        reports.reserve(constraints.size());
        for (const auto& c : constraints) {
            reports.push_back(
                make_constraint_report(psi, c, rotated, kRotatedProbabilityFloor));
        }

        for (const auto& rep : reports) {
            worst_violating =
                std::max(worst_violating, rep.max_violating_probability);
            if (!rep.holds) {
                diag << "rotation " << i << ": constraint " << rep.id
                     << " failed with max violating probability "
                     << format_double(rep.max_violating_probability) << '\n';
                all_hold = false;
            }
        }

        if (config.format == OutputFormat::json) {
            nlohmann::json row{
                {"rotation", i},
                {"axis", {spec.axis.x(), spec.axis.y(), spec.axis.z()}},
                {"angle", spec.angle},
                {"invariance_defect", defect},
            };
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& rep : reports) {
                rows.push_back(to_json(rep));
            }
            row["constraints"] = rows;
            json_rotations.push_back(row);
        } else {
            for (const auto& rep : reports) {
                out << i << ',' << format_double(spec.axis.x()) << ','
                    << format_double(spec.axis.y()) << ','
                    << format_double(spec.axis.z()) << ','
                    << format_double(spec.angle) << ',' << format_double(defect)
                    << ',' << rep.id << ',' << format_double(rep.value) << ','
                    << (rep.holds ? "true" : "false") << ','
                    << format_double(rep.max_violating_probability) << '\n';
            }
        }
    }

    if (config.format == OutputFormat::json) {
        nlohmann::json j{
            {"rotations", json_rotations},
            {"summary",
             {{"all_hold", all_hold},
              {"worst_invariance_defect", worst_defect},
              {"worst_violating_probability", worst_violating}}},
        };
        print_json(out, j);
    } else {
        diag << "sweep of " << specs.size() << " rotations: "
             << (all_hold ? "all constraints hold" : "FAILURES")
             << ", worst invariance defect " << format_double(worst_defect)
             << ", worst violating probability "
             << format_double(worst_violating) << '\n';
    }

    return all_hold ? kExitOk : kExitVerificationFailed;
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    if (config.shots < 0) {
        diag << "--shots must be >= 0\n";
        return kExitUsage;
    }

    const StateVector psi = singlet(system_spin());
    const ObservableMap obs = canonical_observables();
    const ExperimentStats stats =
        run_experiment(psi, nine_constraints(), obs, config.shots, config.seed);

    if (config.format == OutputFormat::json) {
        print_json(out, to_json(stats));
    } else {
        write_experiment_csv(out, stats);
    }
    return kExitOk;
}

}  // namespace qbell
