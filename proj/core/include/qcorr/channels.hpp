#ifndef QCORR_CHANNELS_HPP
#define QCORR_CHANNELS_HPP

#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Coherence factor floor used to represent the asymptotic regime of the
/// dephasing channel with a finite, strictly positive gamma.
inline constexpr double kGammaFloor = 1e-9;

/// Dephasing channel parameters: gamma(t) = exp(-decay_rate * t / 2) and
/// omega = sqrt(1 - gamma^2).  gamma is floored at kGammaFloor so it stays in
/// (0, 1]; gamma^2 + omega^2 = 1 to machine precision.
struct DephasingParams {
    double gamma = 1.0;
    double omega = 0.0;
    double decay_rate = 0.0;
    double time = 0.0;

    static DephasingParams from_decay(double decay_rate, double time);
    /// Dimensionless parameterization: decay_rate fixed to 1, time = Gamma*t.
    static DephasingParams from_gamma_t(double gamma_t);
};

/// Ordered set of Kraus operators acting on one Hilbert space.  Construction
/// checks only dimensional consistency; completeness (sum K^dagger K = I) is
/// a property of physical channels, measured by completeness_residual() and
/// enforced as a precondition of apply().
class KrausChannel {
public:
    explicit KrausChannel(std::vector<ComplexMatrix> operators);

    const std::vector<ComplexMatrix>& operators() const { return operators_; }
    std::size_t dim() const { return dim_; }

private:
    std::vector<ComplexMatrix> operators_;
    std::size_t dim_;
};

/// The qutrit dephasing channel
///   M1 = diag(1, gamma, gamma),  M2 = diag(0, omega, 0),  M3 = diag(0, 0, omega),
/// which dephases the two excited levels against the ground level at a common
/// rate.  Throws NegativeParameter for decay_rate < 0 or time < 0.
KrausChannel qutrit_dephasing(double decay_rate, double time);

/// Same channel built directly from a gamma_t = Gamma*t value.
KrausChannel qutrit_dephasing_gamma_t(double gamma_t);

/// Embed a channel on subsystem B into the composite space: M -> I_A (x) M.
KrausChannel lift_to_composite(const KrausChannel& ch, const BipartiteIndex& idx);

/// max |sum_i K_i^dagger K_i - I| over entries.
double completeness_residual(const KrausChannel& ch);

/// Operator-sum application rho' = sum_i K_i rho K_i^dagger.  Requires a
/// complete channel (residual <= 1e-12, else CompletenessViolation) of
/// matching dimension; the result is re-validated as a density matrix.
DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

/// Closed-form time evolution of a 6x6 qubit-qutrit state under local
/// dephasing of the qutrit: each entry is damped by 1, gamma or gamma^2
/// according to the qutrit levels it connects.  Equivalent to applying the
/// lifted qutrit_dephasing channel; kept as an independent fast path that
/// cross-checks the operator-sum route.
DensityMatrix evolve_closed_form(const DensityMatrix& rho0, double gamma);

/// The entry damping factor of the closed form: 1 when the qutrit levels of
/// row and column coincide, gamma when exactly one of them is the ground
/// level, gamma^2 between the two excited levels.
double dephasing_damping_factor(std::size_t row, std::size_t col, double gamma,
                                const BipartiteIndex& idx);

} // namespace qcorr

#endif
