#ifndef QCORR_CORRELATIONS_HPP
#define QCORR_CORRELATIONS_HPP

#include <cstdint>
#include <utility>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Bloch angles (theta, phi) of the qubit projector pair
///   P1 = (I + n.sigma)/2,  P2 = (I - n.sigma)/2,
///   n = (sin t cos f, sin t sin f, cos t).
/// theta in [0, pi), phi in [0, 2pi); theta = 0 already realizes the
/// {|0><0|, |1><1|} pair, so the half-open theta range loses nothing.
struct MeasurementSetting {
    double theta = 0.0;
    double phi = 0.0;

    MeasurementSetting() = default;
    MeasurementSetting(double theta_, double phi_);
};

/// Map arbitrary real angles onto the canonical ranges through the Bloch
/// vector they describe (n and -n give the same projector pair).
MeasurementSetting canonical_setting(double theta, double phi);

/// Two-stage search over measurement settings: an inclusive coarse grid of
/// coarse_grid_theta x coarse_grid_phi points over [0,pi] x [0,2pi] seeds a
/// Nelder-Mead simplex refinement.
struct OptimizerConfig {
    std::size_t coarse_grid_theta = 61;
    std::size_t coarse_grid_phi = 121;
    std::size_t refine_iterations = 200;
    double refine_tolerance = 1e-10;
};

/// All four correlation quantities of one state.  discord is stored as the
/// exact floating-point difference mutual_information - classical.
struct CorrelationReport {
    double negativity = 0.0;
    double mutual_information = 0.0;
    double classical = 0.0;
    double discord = 0.0;
    MeasurementSetting optimal_setting;
    std::int64_t optimizer_evaluations = 0;
};

/// N = sum_i (|eta_i| - eta_i) over the eigenvalues of the partial transpose
/// taken on the qubit.  Zero exactly for PPT states, which in 2x3 are the
/// separable ones.
double negativity(const DensityMatrix& rho);

/// I = S(A) + S(B) - S(AB) in bits.
double mutual_information(const DensityMatrix& rho);

/// The projector pair of the given setting; first + second == I exactly.
std::pair<ComplexMatrix, ComplexMatrix> projectors(const MeasurementSetting& s);

/// sum_k p_k S(rho_k^B) for the qubit measurement defined by s, with
/// p_k = Tr((P_k (x) I) rho) and rho_k^B the post-measurement qutrit state.
/// Outcomes with p_k <= 1e-12 contribute zero.
double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementSetting& s);

struct ClassicalCorrelationResult {
    double value = 0.0;
    MeasurementSetting setting;
    std::int64_t evaluations = 0;
};

/// C = S(B) - min_s sum_k p_k S(rho_k^B), together with the minimizing
/// setting.
ClassicalCorrelationResult classical_correlation(const DensityMatrix& rho,
                                                 const OptimizerConfig& cfg = {});

/// Full report: negativity, mutual information, classical correlation and
/// discord D = I - C sharing one optimal-setting search.
CorrelationReport discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

} // namespace qcorr

#endif
