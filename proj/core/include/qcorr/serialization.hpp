#ifndef QCORR_SERIALIZATION_HPP
#define QCORR_SERIALIZATION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Fixed float formatting for all emitted files: shortest representation at
/// up to 12 significant digits, identical across runs and platforms.
std::string format_double(double v);

// --- JSON -------------------------------------------------------------
// States use the schema {dimA, dimB, re: [[...]], im: [[...]]}; reports and
// trajectories mirror their types with camelCase field names.

std::string density_matrix_to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(std::string_view text);

std::string report_to_json(const CorrelationReport& report);
std::string trajectory_to_json(const Trajectory& tr);
std::string summary_to_json(const PhenomenonSummary& summary);
std::string sweep_to_json(const std::vector<std::pair<double, PhenomenonSummary>>& rows);

// --- CSV --------------------------------------------------------------

/// Header: gamma_t,negativity,mutual_info,classical,discord,theta_opt,phi_opt
std::string trajectory_to_csv(const Trajectory& tr);

/// Header: p,sudden_death_time,discord_class,asymptotic_discord
/// An absent sudden-death time is an empty field.
std::string sweep_to_csv(const std::vector<std::pair<double, PhenomenonSummary>>& rows);

struct TrajectoryCsvRow {
    double gamma_t;
    double negativity;
    double mutual_info;
    double classical;
    double discord;
    double theta_opt;
    double phi_opt;
};

/// Parse a file produced by trajectory_to_csv; throws Error on a malformed
/// header or row.
std::vector<TrajectoryCsvRow> parse_trajectory_csv(std::string_view text);

} // namespace qcorr

#endif
