#include "qcorr/channels.hpp"

#include <cmath>
#include <utility>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {
constexpr double kApplyCompletenessTol = 1e-12;
}

DephasingParams DephasingParams::from_decay(double decay_rate, double time) {
    if (decay_rate < 0.0) throw NegativeParameter("dephasing: decay rate must be >= 0");
    if (time < 0.0) throw NegativeParameter("dephasing: time must be >= 0");
    DephasingParams p;
    p.decay_rate = decay_rate;
    p.time = time;
    p.gamma = std::max(std::exp(-decay_rate * time / 2.0), kGammaFloor);
    p.omega = std::sqrt(1.0 - p.gamma * p.gamma);
    return p;
}

DephasingParams DephasingParams::from_gamma_t(double gamma_t) {
    return from_decay(1.0, gamma_t);
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators)
    : operators_(std::move(operators)) {
    if (operators_.empty()) {
        throw DimensionMismatch("KrausChannel: operator set is empty");
    }
    dim_ = operators_.front().rows();
    for (const auto& k : operators_) {
        if (!k.is_square() || k.rows() != dim_) {
            throw DimensionMismatch("KrausChannel: operators must share one square dimension");
        }
    }
}

KrausChannel qutrit_dephasing(double decay_rate, double time) {
    const DephasingParams p = DephasingParams::from_decay(decay_rate, time);
    std::vector<ComplexMatrix> ops;
    ops.push_back(ComplexMatrix::diagonal({1.0, p.gamma, p.gamma}));
    ops.push_back(ComplexMatrix::diagonal({0.0, p.omega, 0.0}));
    ops.push_back(ComplexMatrix::diagonal({0.0, 0.0, p.omega}));
    return KrausChannel(std::move(ops));
}

KrausChannel qutrit_dephasing_gamma_t(double gamma_t) {
    return qutrit_dephasing(1.0, gamma_t);
}

KrausChannel lift_to_composite(const KrausChannel& ch, const BipartiteIndex& idx) {
    if (ch.dim() != idx.dim_b) {
        throw DimensionMismatch("lift_to_composite: channel dimension does not match subsystem B");
    }
    const ComplexMatrix eye_a = ComplexMatrix::identity(idx.dim_a);
    std::vector<ComplexMatrix> lifted;
    lifted.reserve(ch.operators().size());
    for (const auto& k : ch.operators()) {
        lifted.push_back(tensor_product(eye_a, k));
    }
    return KrausChannel(std::move(lifted));
}

double completeness_residual(const KrausChannel& ch) {
    ComplexMatrix sum(ch.dim(), ch.dim());
    for (const auto& k : ch.operators()) {
        sum += k.adjoint() * k;
    }
    return max_abs_difference(sum, ComplexMatrix::identity(ch.dim()));
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (ch.dim() != rho.dim()) {
        throw DimensionMismatch("apply: channel and state dimensions differ");
    }
    if (completeness_residual(ch) > kApplyCompletenessTol) {
        throw CompletenessViolation("apply: Kraus set violates the normalization condition");
    }
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto& k : ch.operators()) {
        out += k * rho.matrix() * k.adjoint();
    }
    return validate(std::move(out), rho.index());
}

double dephasing_damping_factor(std::size_t row, std::size_t col, double gamma,
                                const BipartiteIndex& idx) {
    const std::size_t jr = row % idx.dim_b;
    const std::size_t jc = col % idx.dim_b;
    if (jr == jc) return 1.0;
    if ((jr == 0) != (jc == 0)) return gamma;
    return gamma * gamma;
}

DensityMatrix evolve_closed_form(const DensityMatrix& rho0, double gamma) {
    const BipartiteIndex& idx = rho0.index();
    if (idx.dim_a != 2 || idx.dim_b != 3) {
        throw DimensionMismatch("evolve_closed_form: defined for the 2x3 composite only");
    }
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ParameterOutOfRange("evolve_closed_form: gamma must lie in (0, 1]");
    }
    ComplexMatrix out = rho0.matrix();
    for (std::size_t r = 0; r < idx.dim(); ++r)
        for (std::size_t c = 0; c < idx.dim(); ++c)
            out(r, c) *= dephasing_damping_factor(r, c, gamma, idx);
    return validate(std::move(out), idx);
}

} // namespace qcorr
