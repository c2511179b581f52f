#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/states.hpp"

namespace {

using namespace qcorr;

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass() const { return residual <= tolerance; }
};

// Negativity of the evolved family state from the 2x2 block spectra of its
// partial transpose; the eigensolver never enters this route.
double family_negativity_closed_form(double p, double gamma) {
    const double q = 1.0 - 2.0 * p;
    return std::max(0.0, q * gamma - p) + std::max(0.0, p * gamma - q);
}

KrausChannel dephasing_possibly_corrupted(double gamma_t, bool corrupt) {
    KrausChannel ch = qutrit_dephasing_gamma_t(gamma_t);
    if (!corrupt) return ch;
    std::vector<ComplexMatrix> ops = ch.operators();
    ops[1] *= 2.0;
    ops[2] *= 2.0;
    return KrausChannel(std::move(ops));
}

std::vector<double> gamma_t_grid(double stop, double step) {
    const auto count = static_cast<std::size_t>(stop / step + 1e-9);
    std::vector<double> g(count + 1);
    for (std::size_t i = 0; i <= count; ++i) g[i] = static_cast<double>(i) * step;
    return g;
}

CheckResult check_completeness(bool corrupt) {
    double worst = 0.0;
    for (double t : gamma_t_grid(10.0, 0.5)) {
        worst = std::max(worst, completeness_residual(dephasing_possibly_corrupted(t, corrupt)));
    }
    return {"kraus-completeness", worst, 1e-14};
}

CheckResult check_operator_sum_vs_closed_form(const std::vector<DensityMatrix>& states) {
    const BipartiteIndex idx{2, 3};
    double worst = 0.0;
    for (double t : gamma_t_grid(10.0, 0.5263157894736842)) { // 20 points over [0, 10]
        const double gamma = DephasingParams::from_gamma_t(t).gamma;
        const KrausChannel lifted = lift_to_composite(qutrit_dephasing_gamma_t(t), idx);
        for (const DensityMatrix& rho : states) {
            const DensityMatrix via_kraus = apply(lifted, rho);
            const DensityMatrix via_closed = evolve_closed_form(rho, gamma);
            worst = std::max(worst, max_abs_difference(via_kraus.matrix(), via_closed.matrix()));
        }
    }
    return {"operator-sum-vs-closed-form", worst, 1e-12};
}

CheckResult check_population_invariance(const std::vector<DensityMatrix>& states) {
    const BipartiteIndex idx{2, 3};
    double worst = 0.0;
    for (double t : {0.0, 0.7, 2.3, 6.1, 10.0}) {
        const KrausChannel lifted = lift_to_composite(qutrit_dephasing_gamma_t(t), idx);
        for (const DensityMatrix& rho : states) {
            const DensityMatrix evolved = apply(lifted, rho);
            for (std::size_t i = 0; i < idx.dim(); ++i) {
                worst = std::max(worst,
                                 std::abs(evolved.matrix()(i, i) - rho.matrix()(i, i)));
            }
        }
    }
    return {"population-invariance", worst, 1e-14};
}

CheckResult check_negativity_closed_form() {
    double worst = 0.0;
    for (double p : {0.0, 0.05, 0.1, 0.15, 0.23, 0.3, 1.0 / 3.0, 0.4, 0.45, 0.5}) {
        const DensityMatrix rho0 = family_state(p);
        for (double t : gamma_t_grid(10.0, 0.25)) {
            const double gamma = DephasingParams::from_gamma_t(t).gamma;
            const double numeric = negativity(evolve_closed_form(rho0, gamma));
            worst = std::max(worst, std::abs(numeric - family_negativity_closed_form(p, gamma)));
        }
    }
    return {"negativity-closed-form", worst, 1e-9};
}

CheckResult check_semigroup(const std::vector<DensityMatrix>& states, std::mt19937_64& rng) {
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    double worst = 0.0;
    for (const DensityMatrix& rho : states) {
        const double g1 = 0.05 + 0.95 * unit();
        const double g2 = 0.05 + 0.95 * unit();
        const DensityMatrix two_step = evolve_closed_form(evolve_closed_form(rho, g1), g2);
        const DensityMatrix one_step = evolve_closed_form(rho, g1 * g2);
        worst = std::max(worst, max_abs_difference(two_step.matrix(), one_step.matrix()));
    }
    return {"closed-form-semigroup", worst, 1e-12};
}

CheckResult check_uncorrelated_discord(std::mt19937_64& rng) {
    const BipartiteIndex idx{2, 3};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        const DensityMatrix a = random_state(BipartiteIndex{1, 2}, rng);
        const DensityMatrix b = random_state(BipartiteIndex{1, 3}, rng);
        const CorrelationReport r = discord(product_state(a.matrix(), b.matrix()));
        worst = std::max({worst, std::abs(r.discord), std::abs(r.mutual_information)});
    }
    worst = std::max(worst, std::abs(discord(maximally_mixed(idx)).discord));
    return {"uncorrelated-state-discord", worst, 1e-6};
}

} // namespace

int run_verify(bool inject_kraus_defect) {
    std::mt19937_64 rng(0x51c0ffee11ULL);
    const BipartiteIndex idx{2, 3};
    std::vector<DensityMatrix> states;
    states.reserve(100);
    for (int i = 0; i < 100; ++i) states.push_back(random_state(idx, rng));

    std::vector<CheckResult> results;
    results.push_back(check_completeness(inject_kraus_defect));
    results.push_back(check_operator_sum_vs_closed_form(states));
    results.push_back(check_population_invariance(states));
    results.push_back(check_negativity_closed_form());
    results.push_back(check_semigroup(states, rng));
    results.push_back(check_uncorrelated_discord(rng));

    bool all_pass = true;
    for (const CheckResult& r : results) {
        all_pass = all_pass && r.pass();
        std::printf("[%s] %-28s max residual %.3e  (tol %.0e)\n",
                    r.pass() ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.tolerance);
    }
    std::printf("%s\n", all_pass ? "verify: all checks passed"
                                 : "verify: at least one check failed");
    return all_pass ? 0 : 1;
}
