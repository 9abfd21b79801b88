#include "qbell/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// "x,y,z" -> vector; anything else is a usage error.
bool parse_axis(const std::string& text, Eigen::Vector3d& axis) {
    std::istringstream in(text);
    char comma1 = 0;
    char comma2 = 0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    if (!(in >> x >> comma1 >> y >> comma2 >> z) || comma1 != ',' ||
        comma2 != ',') {
        return false;
    }
    std::string rest;
    in >> rest;
    if (!rest.empty()) {
        return false;
    }
    axis = Eigen::Vector3d(x, y, z);
    return true;
}

void add_common_flags(CLI::App* cmd, qbell::RunConfig& config,
                      std::string& format, std::string& output_path) {
    cmd->add_option("--seed", config.seed, "Master seed (default 0)");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--output", output_path,
                    "Write the report to this file instead of stdout")
        ->envname("QBELL_OUTPUT");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Verifies the inequality-free Bell contradiction for two spin-3/2 "
        "particles in the singlet state"};
    app.require_subcommand(1);

    qbell::RunConfig config;
    std::string format = "json";
    std::string output_path;
    std::string axis_text;
    double angle = 0.0;

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the nine perfect correlations exactly");
    add_common_flags(verify, config, format, output_path);

    CLI::App* lhv = app.add_subcommand(
        "lhv", "Search all 4096 classical assignments for a consistent one");
    add_common_flags(lhv, config, format, output_path);

    CLI::App* sweep = app.add_subcommand(
        "rotate-sweep", "Re-check the correlations under common rotations");
    add_common_flags(sweep, config, format, output_path);
    sweep->add_option("--rotations", config.rotations,
                      "Number of seeded random rotations (default 100)");
    sweep->add_option("--axis", axis_text, "Explicit rotation axis as x,y,z");
    CLI::Option* angle_opt = sweep->add_option(
        "--angle", angle, "Explicit rotation angle in radians");

    CLI::App* sample = app.add_subcommand(
        "sample", "Sample measurement rounds from the Born distribution");
    add_common_flags(sample, config, format, output_path);
    sample->add_option("--shots", config.shots,
                       "Rounds per constraint (default 100000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? qbell::kExitOk : qbell::kExitUsage;
    }

    config.format = format == "csv" ? qbell::OutputFormat::csv
                                    : qbell::OutputFormat::json;
    if (!output_path.empty()) {
        config.output_path = output_path;
    }
    if (!axis_text.empty()) {
        Eigen::Vector3d axis;
        if (!parse_axis(axis_text, axis)) {
            std::cerr << "--axis expects three comma-separated numbers\n";
            return qbell::kExitUsage;
        }
        config.axis = axis;
    }
    if (angle_opt->count() > 0) {
        config.angle = angle;
    }

    std::ofstream file;
    if (config.output_path) {
        file.open(*config.output_path);
        if (!file) {
            std::cerr << "cannot open output file: " << *config.output_path
                      << '\n';
            return qbell::kExitUsage;
        }
    }
    std::ostream& out = file.is_open() ? file : std::cout;

    try {
        if (verify->parsed()) {
            return qbell::cmd_verify(config, out, std::cerr);
        }
        if (lhv->parsed()) {
            return qbell::cmd_lhv(config, out, std::cerr);
        }
        if (sweep->parsed()) {
            return qbell::cmd_rotate_sweep(config, out, std::cerr);
        }
        return qbell::cmd_sample(config, out, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qbell::kExitVerificationFailed;
    }
}
