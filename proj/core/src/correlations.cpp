#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOutcomeProbabilityFloor = 1e-12;

struct BlochVector {
    double x, y, z;
};

BlochVector bloch_vector(double theta, double phi) {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

// The four 3x3 blocks of a 2x3 state over the qubit indices,
// (block[a][i])_{j j'} = rho_{(a j),(i j')}, plus the qutrit marginal.
// Precomputing them makes one objective evaluation a weighted sum of fixed
// blocks instead of a 6x6 sandwich.
struct MeasurementContext {
    std::array<std::array<ComplexMatrix, 2>, 2> block;
    ComplexMatrix rho_b;
};

MeasurementContext make_context(const DensityMatrix& rho) {
    const BipartiteIndex& idx = rho.index();
    if (idx.dim_a != 2) {
        throw DimensionMismatch("measurement acts on a qubit; subsystem A must have dimension 2");
    }
    MeasurementContext ctx;
    const std::size_t db = idx.dim_b;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t i = 0; i < 2; ++i) {
            ComplexMatrix b(db, db);
            for (std::size_t j = 0; j < db; ++j)
                for (std::size_t jp = 0; jp < db; ++jp)
                    b(j, jp) = rho.matrix()(idx.composite(a, j), idx.composite(i, jp));
            ctx.block[a][i] = std::move(b);
        }
    }
    ctx.rho_b = ctx.block[0][0] + ctx.block[1][1];
    return ctx;
}

// Unnormalized outcome block B_k = sum_{i,a} (P_k)_{ia} R_{ai} for outcome 1;
// outcome 2 follows as rho_B - B_1 because P_2 = I - P_1.
ComplexMatrix outcome_block(const MeasurementContext& ctx, const BlochVector& n) {
    const double p00 = 0.5 * (1.0 + n.z);
    const double p11 = 0.5 * (1.0 - n.z);
    const Complex p01{0.5 * n.x, -0.5 * n.y};
    const Complex p10 = std::conj(p01);

    ComplexMatrix b = ctx.block[0][0];
    b *= p00;
    ComplexMatrix term = ctx.block[1][0];
    term *= p01;
    b += term;
    term = ctx.block[0][1];
    term *= p10;
    b += term;
    term = ctx.block[1][1];
    term *= p11;
    b += term;
    return b;
}

// Contribution p_k S(B_k / p_k) evaluated without dividing by p_k:
// with H(B) = sum_i h(mu_i) over the eigenvalues of B and h(x) = -x log2 x,
//   p S(B/p) = H(B) - h(p).
// Tiny negative eigenvalues from roundoff are clamped by entropy_term.
double weighted_outcome_entropy(const ComplexMatrix& b) {
    const double pk = b.trace().real();
    if (pk <= kOutcomeProbabilityFloor) return 0.0;
    double acc = 0.0;
    for (double mu : hermitian_eigenvalues(b, 1e-9)) acc += entropy_term(mu);
    return acc - entropy_term(pk);
}

double conditional_entropy_objective(const MeasurementContext& ctx, double theta, double phi) {
    const BlochVector n = bloch_vector(theta, phi);
    const ComplexMatrix b1 = outcome_block(ctx, n);
    const ComplexMatrix b2 = ctx.rho_b - b1;
    return weighted_outcome_entropy(b1) + weighted_outcome_entropy(b2);
}

struct MinimizationOutcome {
    double value = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    std::int64_t evaluations = 0;
};

void check_optimizer_config(const OptimizerConfig& cfg) {
    if (cfg.coarse_grid_theta < 2 || cfg.coarse_grid_phi < 2) {
        throw ParameterOutOfRange("optimizer: coarse grid counts must be >= 2");
    }
    if (!(cfg.refine_tolerance > 0.0)) {
        throw ParameterOutOfRange("optimizer: refine tolerance must be > 0");
    }
}

// Coarse inclusive grid over [0,pi] x [0,2pi] followed by Nelder-Mead
// refinement seeded at the best grid cell.  The best value ever evaluated is
// tracked so refinement can never report worse than the grid stage.
MinimizationOutcome minimize_conditional_entropy(const MeasurementContext& ctx,
                                                 const OptimizerConfig& cfg) {
    check_optimizer_config(cfg);
    MinimizationOutcome best;
    best.value = std::numeric_limits<double>::infinity();

    auto evaluate = [&](double theta, double phi) {
        const double f = conditional_entropy_objective(ctx, theta, phi);
        ++best.evaluations;
        if (f < best.value) {
            best.value = f;
            best.theta = theta;
            best.phi = phi;
        }
        return f;
    };

    const double dth = kPi / static_cast<double>(cfg.coarse_grid_theta - 1);
    const double dph = 2.0 * kPi / static_cast<double>(cfg.coarse_grid_phi - 1);
    for (std::size_t i = 0; i < cfg.coarse_grid_theta; ++i)
        for (std::size_t j = 0; j < cfg.coarse_grid_phi; ++j)
            evaluate(static_cast<double>(i) * dth, static_cast<double>(j) * dph);

    // Simplex refinement (reflection 1, expansion 2, contraction 0.5,
    // shrink 0.5).  Vertices may wander outside the canonical angle ranges;
    // the objective is smooth and periodic there, and the final setting is
    // canonicalized afterwards.
    using Vertex = std::array<double, 2>;
    std::array<Vertex, 3> xs{Vertex{best.theta, best.phi},
                             Vertex{best.theta + 0.5 * dth, best.phi},
                             Vertex{best.theta, best.phi + 0.5 * dph}};
    std::array<double, 3> fs;
    fs[0] = best.value;
    fs[1] = evaluate(xs[1][0], xs[1][1]);
    fs[2] = evaluate(xs[2][0], xs[2][1]);

    for (std::size_t iter = 0; iter < cfg.refine_iterations; ++iter) {
        std::array<std::size_t, 3> ord{0, 1, 2};
        std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::array<Vertex, 3> sx{xs[ord[0]], xs[ord[1]], xs[ord[2]]};
        const std::array<double, 3> sf{fs[ord[0]], fs[ord[1]], fs[ord[2]]};
        xs = sx;
        fs = sf;
        if (fs[2] - fs[0] <= cfg.refine_tolerance) break;

        const Vertex centroid{0.5 * (xs[0][0] + xs[1][0]), 0.5 * (xs[0][1] + xs[1][1])};
        auto along = [&](double scale) {
            return Vertex{centroid[0] + scale * (centroid[0] - xs[2][0]),
                          centroid[1] + scale * (centroid[1] - xs[2][1])};
        };

        const Vertex xr = along(1.0);
        const double fr = evaluate(xr[0], xr[1]);
        if (fr < fs[0]) {
            const Vertex xe = along(2.0);
            const double fe = evaluate(xe[0], xe[1]);
            if (fe < fr) {
                xs[2] = xe;
                fs[2] = fe;
            } else {
                xs[2] = xr;
                fs[2] = fr;
            }
            continue;
        }
        if (fr < fs[1]) {
            xs[2] = xr;
            fs[2] = fr;
            continue;
        }
        const bool outside = fr < fs[2];
        const Vertex xc = along(outside ? 0.5 : -0.5);
        const double fc = evaluate(xc[0], xc[1]);
        if (fc < (outside ? fr : fs[2])) {
            xs[2] = xc;
            fs[2] = fc;
            continue;
        }
        for (std::size_t v = 1; v < 3; ++v) {
            xs[v] = Vertex{xs[0][0] + 0.5 * (xs[v][0] - xs[0][0]),
                           xs[0][1] + 0.5 * (xs[v][1] - xs[0][1])};
            fs[v] = evaluate(xs[v][0], xs[v][1]);
        }
    }
    return best;
}

} // namespace

MeasurementSetting::MeasurementSetting(double theta_, double phi_) : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta < kPi)) {
        throw ParameterOutOfRange("measurement setting: theta must lie in [0, pi)");
    }
    if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
        throw ParameterOutOfRange("measurement setting: phi must lie in [0, 2*pi)");
    }
}

MeasurementSetting canonical_setting(double theta, double phi) {
    const BlochVector n = bloch_vector(theta, phi);
    const double nz = std::clamp(n.z, -1.0, 1.0);
    const double theta_c = std::acos(nz);
    if (theta_c >= kPi) {
        // n = -z describes the same projector pair as theta = 0.
        return MeasurementSetting(0.0, 0.0);
    }
    double phi_c = std::atan2(n.y, n.x);
    if (phi_c < 0.0) phi_c += 2.0 * kPi;
    if (phi_c >= 2.0 * kPi) phi_c = 0.0;
    return MeasurementSetting(theta_c, phi_c);
}

double negativity(const DensityMatrix& rho) {
    const ComplexMatrix pt = partial_transpose(rho.matrix(), rho.index(), Subsystem::A);
    double n = 0.0;
    for (double eta : hermitian_eigenvalues(pt)) n += std::abs(eta) - eta;
    return n;
}

double mutual_information(const DensityMatrix& rho) {
    const double s_a = von_neumann_entropy(partial_trace(rho.matrix(), rho.index(), Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), rho.index(), Subsystem::B));
    const double s_ab = von_neumann_entropy(rho.matrix());
    return s_a + s_b - s_ab;
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const MeasurementSetting& s) {
    const BlochVector n = bloch_vector(s.theta, s.phi);
    ComplexMatrix p1(2, 2);
    p1(0, 0) = 0.5 * (1.0 + n.z);
    p1(1, 1) = 0.5 * (1.0 - n.z);
    p1(0, 1) = Complex{0.5 * n.x, -0.5 * n.y};
    p1(1, 0) = std::conj(p1(0, 1));
    const ComplexMatrix p2 = ComplexMatrix::identity(2) - p1;
    return {p1, p2};
}

double measured_conditional_entropy(const DensityMatrix& rho, const MeasurementSetting& s) {
    const MeasurementContext ctx = make_context(rho);
    return conditional_entropy_objective(ctx, s.theta, s.phi);
}

ClassicalCorrelationResult classical_correlation(const DensityMatrix& rho,
                                                 const OptimizerConfig& cfg) {
    const MeasurementContext ctx = make_context(rho);
    const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), rho.index(), Subsystem::B));
    const MinimizationOutcome min = minimize_conditional_entropy(ctx, cfg);
    ClassicalCorrelationResult out;
    out.value = s_b - min.value;
    out.setting = canonical_setting(min.theta, min.phi);
    out.evaluations = min.evaluations;
    return out;
}

CorrelationReport discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
    const MeasurementContext ctx = make_context(rho);
    const double s_a = von_neumann_entropy(partial_trace(rho.matrix(), rho.index(), Subsystem::A));
    const double s_b = von_neumann_entropy(ctx.rho_b);
    const double s_ab = von_neumann_entropy(rho.matrix());
    const MinimizationOutcome min = minimize_conditional_entropy(ctx, cfg);

    CorrelationReport report;
    report.negativity = negativity(rho);
    report.mutual_information = s_a + s_b - s_ab;
    report.classical = s_b - min.value;
    report.discord = report.mutual_information - report.classical;
    report.optimal_setting = canonical_setting(min.theta, min.phi);
    report.optimizer_evaluations = min.evaluations;
    return report;
}

} // namespace qcorr
