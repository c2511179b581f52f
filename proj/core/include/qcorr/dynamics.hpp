#ifndef QCORR_DYNAMICS_HPP
#define QCORR_DYNAMICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

inline constexpr double kDefaultDeathTol = 1e-9;
inline constexpr double kDefaultFlatTol = 1e-3;

/// One trajectory of the family state over a dimensionless Gamma*t grid.
/// The grid must be strictly ascending and start at 0.
struct TrajectoryConfig {
    FamilyParameter p;
    std::vector<double> gamma_t;
    OptimizerConfig optimizer;
    /// Worker threads for the per-point fan-out; 0 means use all hardware
    /// threads.  Results are assembled in grid order regardless.
    unsigned workers = 0;
};

struct TrajectoryPoint {
    double gamma_t = 0.0;
    CorrelationReport report;
};

struct Trajectory {
    TrajectoryConfig config;
    std::vector<TrajectoryPoint> points;
};

enum class DiscordClass { Invariant, FrozenThenDecay, Decaying };

std::string to_string(DiscordClass c);
std::optional<DiscordClass> discord_class_from_string(const std::string& s);

struct PhenomenonSummary {
    std::optional<double> sudden_death_time;
    DiscordClass discord_class = DiscordClass::Invariant;
    std::optional<double> frozen_until;
    double asymptotic_discord = 0.0;
};

/// Inclusive uniform grid start, start+step, ...; the stop value is included
/// when step divides the span (within floating-point slack).
std::vector<double> uniform_grid(double start, double stop, double step);

/// Evolve family_state(p) through the closed-form dephasing map at every grid
/// point and compute the full correlation report.  The operator-sum route is
/// cross-checked against the closed form at the first, middle and last grid
/// points to 1e-12.
Trajectory run_trajectory(const TrajectoryConfig& cfg);

/// Smallest grid time from which negativity stays <= death_tol; absent when
/// entanglement survives through the last grid point.
std::optional<double> detect_sudden_death(const Trajectory& tr, double death_tol = kDefaultDeathTol);

/// Classify the discord dynamics against D(0): invariant when every point
/// stays within flat_tol; frozen-then-decay when a flat initial prefix is
/// followed by a departure and the final discord stays above flat_tol;
/// decaying otherwise.  Also fills the sudden-death time.
PhenomenonSummary classify_discord(const Trajectory& tr, double flat_tol = kDefaultFlatTol,
                                   double death_tol = kDefaultDeathTol);

/// One independent trajectory per family parameter, summarized.
std::vector<std::pair<double, PhenomenonSummary>> sweep_p(
    const std::vector<FamilyParameter>& p_values, const std::vector<double>& grid,
    const OptimizerConfig& opt, double flat_tol = kDefaultFlatTol,
    double death_tol = kDefaultDeathTol, unsigned workers = 0);

} // namespace qcorr

#endif
