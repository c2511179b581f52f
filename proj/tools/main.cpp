#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/serialization.hpp"
#include "verify.hpp"

namespace {

using namespace qcorr;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitNumericalFailure = 3;

enum class OutputFormat { Csv, Json };

struct RunManifest {
    double p = 0.15;
    std::vector<double> p_values;
    std::string grid_spec = "0:10:0.05";
    std::string output_path;
    OutputFormat format = OutputFormat::Csv;
    OptimizerConfig optimizer;
    double flat_tol = kDefaultFlatTol;
    double death_tol = kDefaultDeathTol;
    unsigned workers = 0;
};

// start:stop:step, inclusive of stop when step divides the span.
std::vector<double> parse_grid_spec(const std::string& spec) {
    double start = 0.0, stop = 0.0, step = 0.0;
    char extra = '\0';
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &extra) != 3) {
        throw ParameterOutOfRange("grid: expected start:stop:step, got '" + spec + "'");
    }
    if (start != 0.0) {
        throw ParameterOutOfRange("grid: phenomenon classification requires start = 0");
    }
    if (step > 0.0 && (stop - start) / step > 1e6) {
        throw ParameterOutOfRange("grid: more than 1e6 points requested");
    }
    return uniform_grid(start, stop, step);
}

std::vector<FamilyParameter> parse_p_list(const std::vector<double>& values) {
    if (values.empty()) {
        throw ParameterOutOfRange("sweep: --p-list must not be empty");
    }
    std::vector<FamilyParameter> out;
    out.reserve(values.size());
    for (double v : values) out.emplace_back(v);
    return out;
}

unsigned workers_from_env() {
    const char* env = std::getenv("DISCORD_DYN_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1) {
        throw ParameterOutOfRange("DISCORD_DYN_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(v);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParameterOutOfRange("cannot open output file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw ParameterOutOfRange("failed writing output file '" + path + "'");
    }
}

int cmd_trajectory(const RunManifest& manifest) {
    TrajectoryConfig cfg{FamilyParameter(manifest.p), parse_grid_spec(manifest.grid_spec),
                         manifest.optimizer, manifest.workers};
    const Trajectory tr = run_trajectory(cfg);
    const PhenomenonSummary summary = classify_discord(tr, manifest.flat_tol, manifest.death_tol);

    write_file(manifest.output_path, manifest.format == OutputFormat::Csv
                                         ? trajectory_to_csv(tr)
                                         : trajectory_to_json(tr));
    write_file(manifest.output_path + ".summary.json", summary_to_json(summary) + "\n");

    std::cout << "trajectory: p=" << format_double(manifest.p)
              << " points=" << tr.points.size()
              << " discord_class=" << to_string(summary.discord_class);
    if (summary.sudden_death_time) {
        std::cout << " sudden_death_time=" << format_double(*summary.sudden_death_time);
    }
    std::cout << '\n';
    return kExitOk;
}

int cmd_sweep(const RunManifest& manifest) {
    const auto p_values = parse_p_list(manifest.p_values);
    const auto grid = parse_grid_spec(manifest.grid_spec);
    const auto rows = sweep_p(p_values, grid, manifest.optimizer, manifest.flat_tol,
                              manifest.death_tol, manifest.workers);

    write_file(manifest.output_path,
               manifest.format == OutputFormat::Csv ? sweep_to_csv(rows) : sweep_to_json(rows));
    std::cout << "sweep: " << rows.size() << " family parameters written to "
              << manifest.output_path << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum correlation dynamics of qubit-qutrit states under local "
                 "qutrit dephasing: negativity, mutual information, classical "
                 "correlation and discord over a dimensionless Gamma*t grid."};
    app.require_subcommand(1);

    RunManifest manifest;
    std::string format_name = "csv";
    bool inject_kraus_defect = false;

    const std::string grid_help =
        "Gamma*t grid as start:stop:step (inclusive of stop when step divides "
        "the span); start must be 0";

    CLI::App* trajectory = app.add_subcommand(
        "trajectory", "Evolve one family state and write per-grid-point correlations");
    trajectory->add_option("--p", manifest.p, "Family parameter p in [0, 0.5]")->required();
    trajectory->add_option("--grid", manifest.grid_spec, grid_help)->capture_default_str();
    trajectory->add_option("--out", manifest.output_path, "Output file path")->required();

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Summarize phenomena for a list of family parameters");
    sweep->add_option("--p-list", manifest.p_values,
                      "Comma-separated family parameters")->required()->delimiter(',');
    sweep->add_option("--grid", manifest.grid_spec, grid_help)->capture_default_str();
    sweep->add_option("--out", manifest.output_path, "Output file path")->required();

    for (CLI::App* cmd : {trajectory, sweep}) {
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--grid-theta", manifest.optimizer.coarse_grid_theta,
                        "Coarse optimizer grid points over theta")->capture_default_str();
        cmd->add_option("--grid-phi", manifest.optimizer.coarse_grid_phi,
                        "Coarse optimizer grid points over phi")->capture_default_str();
        cmd->add_option("--flat-tol", manifest.flat_tol,
                        "Flatness tolerance for discord classification")->capture_default_str();
        cmd->add_option("--death-tol", manifest.death_tol,
                        "Negativity threshold for sudden death")->capture_default_str();
    }

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the self-verification suite on fixed seeds");
    verify->add_flag("--inject-kraus-defect", inject_kraus_defect,
                     "Corrupt the dephasing Kraus set (omega doubled) to exercise "
                     "the completeness check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArguments;
    }

    try {
        manifest.workers = workers_from_env();
        manifest.format = (format_name == "json") ? OutputFormat::Json : OutputFormat::Csv;
        if (trajectory->parsed()) return cmd_trajectory(manifest);
        if (sweep->parsed()) return cmd_sweep(manifest);
        return run_verify(inject_kraus_defect) == 0 ? kExitOk : kExitVerifyFailed;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const NegativeParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumericalFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitNumericalFailure;
    }
}
