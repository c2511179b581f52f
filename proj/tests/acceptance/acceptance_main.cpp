// Acceptance suite: end-to-end checks of the channel stack, the correlation
// functionals and the trajectory phenomena at their required tolerances.
// Prints one line per criterion and exits with the number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <future>
#include <random>
#include <string>
#include <vector>

#include "qcorr/channels.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/serialization.hpp"
#include "qcorr/states.hpp"
#include "support/oracles.hpp"

using namespace qcorr;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, ...) {
    char buf[512];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------------
// Criteria 1 and 2 share one mandated sample: 100 random 2x3 states evolved
// at 20 Gamma*t values through both channel routes.

struct ChannelSample {
    double max_path_residual = 0.0;
    double max_completeness = 0.0;
    double max_diagonal_drift = 0.0;
    double seconds = 0.0;
};

ChannelSample run_channel_sample() {
    const auto start = Clock::now();
    std::mt19937_64 rng(0xACCE55ED);
    const BipartiteIndex idx{2, 3};
    std::vector<DensityMatrix> states;
    states.reserve(100);
    for (int i = 0; i < 100; ++i) states.push_back(random_state(idx, rng));

    ChannelSample s;
    for (int k = 0; k < 20; ++k) {
        const double t = 10.0 * static_cast<double>(k) / 19.0;
        const KrausChannel qutrit = qutrit_dephasing_gamma_t(t);
        s.max_completeness = std::max(s.max_completeness, completeness_residual(qutrit));
        const KrausChannel lifted = lift_to_composite(qutrit, idx);
        s.max_completeness = std::max(s.max_completeness, completeness_residual(lifted));
        const double gamma = DephasingParams::from_gamma_t(t).gamma;
        for (const DensityMatrix& rho : states) {
            const DensityMatrix via_kraus = apply(lifted, rho);
            const DensityMatrix via_closed = evolve_closed_form(rho, gamma);
            s.max_path_residual = std::max(
                s.max_path_residual, max_abs_difference(via_kraus.matrix(), via_closed.matrix()));
            for (std::size_t d = 0; d < idx.dim(); ++d) {
                s.max_diagonal_drift =
                    std::max({s.max_diagonal_drift,
                              std::abs(via_kraus.matrix()(d, d) - rho.matrix()(d, d)),
                              std::abs(via_closed.matrix()(d, d) - rho.matrix()(d, d))});
            }
        }
    }
    s.seconds = seconds_since(start);
    return s;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    const std::vector<double> grid = uniform_grid(0.0, 10.0, 0.05);

    // --- 1 & 2: channel correctness and population invariance ---------
    const ChannelSample channel = run_channel_sample();
    {
        const bool pass = channel.max_path_residual <= 1e-12 &&
                          channel.max_completeness <= 1e-14 && channel.seconds <= 5.0;
        results.push_back({1, "channel-correctness", pass,
                           fmt("path residual %.2e (tol 1e-12), completeness %.2e (tol 1e-14), "
                               "%.2f s (limit 5 s)",
                               channel.max_path_residual, channel.max_completeness,
                               channel.seconds)});
    }

    // Diagonal drift along the family trajectories feeds criterion 2 as well.
    double family_diag_drift = 0.0;
    for (double p : {0.10, 0.15, 0.23, 0.30, 1.0 / 3.0}) {
        const DensityMatrix rho0 = family_state(p);
        for (double t : {0.05, 1.0, 5.0, 10.0}) {
            const DensityMatrix evolved =
                evolve_closed_form(rho0, DephasingParams::from_gamma_t(t).gamma);
            for (std::size_t d = 0; d < 6; ++d) {
                family_diag_drift = std::max(
                    family_diag_drift, std::abs(evolved.matrix()(d, d) - rho0.matrix()(d, d)));
            }
        }
    }
    {
        const double drift = std::max(channel.max_diagonal_drift, family_diag_drift);
        results.push_back({2, "population-invariance", drift <= 1e-14,
                           fmt("max diagonal drift %.2e (tol 1e-14)", drift)});
    }

    // --- 3: separability point and the negativity closed form ---------
    {
        double separable_max = 0.0;
        const DensityMatrix separable = family_state(1.0 / 3.0);
        for (double t : grid) {
            const double gamma = DephasingParams::from_gamma_t(t).gamma;
            separable_max = std::max(separable_max, negativity(evolve_closed_form(separable, gamma)));
        }
        double formula_err = 0.0;
        for (double p : {0.10, 0.15, 0.23, 0.30}) {
            const DensityMatrix rho0 = family_state(p);
            for (double t : grid) {
                const double gamma = DephasingParams::from_gamma_t(t).gamma;
                const double numeric = negativity(evolve_closed_form(rho0, gamma));
                const double formula = std::max(0.0, (1.0 - 2.0 * p) * gamma - p);
                formula_err = std::max(formula_err, std::abs(numeric - formula));
            }
        }
        const bool pass = separable_max <= 1e-9 && formula_err <= 1e-9;
        results.push_back({3, "separability-point", pass,
                           fmt("N(p=1/3) max %.2e (tol 1e-9), closed-form deviation %.2e "
                               "(tol 1e-9) over 201 points",
                               separable_max, formula_err)});
    }

    // --- 4: sudden death on the default grid at default settings ------
    Trajectory traj_015, traj_023;
    double secs_015 = 0.0, secs_023 = 0.0;
    {
        auto t0 = Clock::now();
        traj_015 = run_trajectory({FamilyParameter(0.15), grid, OptimizerConfig{}, 0});
        secs_015 = seconds_since(t0);
        t0 = Clock::now();
        traj_023 = run_trajectory({FamilyParameter(0.23), grid, OptimizerConfig{}, 0});
        secs_023 = seconds_since(t0);

        const auto death_015 = detect_sudden_death(traj_015, 1e-9);
        const auto death_023 = detect_sudden_death(traj_023, 1e-9);
        const double expected_015 = 2.0 * std::log(0.70 / 0.15);
        const double expected_023 = 2.0 * std::log(0.54 / 0.23);
        const bool pass = death_015 && death_023 &&
                          std::abs(*death_015 - expected_015) <= 0.05 + 1e-12 &&
                          std::abs(*death_023 - expected_023) <= 0.05 + 1e-12 &&
                          secs_015 <= 120.0 && secs_023 <= 120.0;
        results.push_back(
            {4, "sudden-death-times", pass,
             fmt("p=0.15: %.4f vs %.4f, p=0.23: %.4f vs %.4f (within one 0.05 step); "
                 "%.1f s / %.1f s (limit 120 s each)",
                 death_015 ? *death_015 : -1.0, expected_015, death_023 ? *death_023 : -1.0,
                 expected_023, secs_015, secs_023)});
    }

    // --- 5: time-invariant discord at p = 0.23 -------------------------
    {
        const double d0 = traj_023.points.front().report.discord;
        double max_dev = 0.0;
        for (const auto& pt : traj_023.points) {
            max_dev = std::max(max_dev, std::abs(pt.report.discord - d0));
        }
        const bool pass = max_dev <= 1e-3 && d0 > 0.01;
        results.push_back({5, "invariant-discord", pass,
                           fmt("max |D - D(0)| = %.2e over 201 points (tol 1e-3), "
                               "D(0) = %.4f bits (> 0.01)",
                               max_dev, d0)});
    }

    // --- 6: frozen-then-decay at p = 0.15 -------------------------------
    {
        const double d0 = traj_015.points.front().report.discord;
        std::size_t flat_steps = 0;
        for (std::size_t i = 1; i < traj_015.points.size(); ++i) {
            if (std::abs(traj_015.points[i].report.discord - d0) > 1e-3) break;
            flat_steps = i;
        }
        double max_departure = 0.0;
        for (const auto& pt : traj_015.points) {
            max_departure = std::max(max_departure, std::abs(pt.report.discord - d0));
        }
        const double final_discord = traj_015.points.back().report.discord;
        const bool pass = flat_steps >= 10 && max_departure > 5e-3 && final_discord > 1e-3;
        results.push_back({6, "frozen-then-decay", pass,
                           fmt("flat prefix %zu steps (need >= 10), departure %.3f (> 5e-3), "
                               "D(10) = %.4f bits (> 1e-3)",
                               flat_steps, max_departure, final_discord)});
    }

    // --- 7: correlation functional sanity suite -------------------------
    {
        std::mt19937_64 rng(0x5A11);
        double worst_product = 0.0;
        bool identity_exact = true;
        for (int i = 0; i < 20; ++i) {
            const DensityMatrix a = random_state(BipartiteIndex{1, 2}, rng);
            const DensityMatrix b = random_state(BipartiteIndex{1, 3}, rng);
            const CorrelationReport r = discord(product_state(a.matrix(), b.matrix()));
            worst_product =
                std::max({worst_product, std::abs(r.discord), std::abs(r.mutual_information)});
            identity_exact = identity_exact && (r.classical + r.discord == r.mutual_information);
        }
        const CorrelationReport mixed = discord(maximally_mixed(BipartiteIndex{2, 3}));
        identity_exact = identity_exact && (mixed.classical + mixed.discord == mixed.mutual_information);
        for (const auto& pt : traj_015.points) {
            identity_exact = identity_exact && (pt.report.classical + pt.report.discord ==
                                                pt.report.mutual_information);
        }

        ComplexMatrix bell(6, 6);
        bell(0, 0) = bell(4, 4) = bell(0, 4) = bell(4, 0) = 0.5;
        const double bell_negativity = negativity(validate(std::move(bell), BipartiteIndex{2, 3}));

        const bool pass = worst_product <= 1e-6 && std::abs(mixed.discord) <= 1e-6 &&
                          identity_exact && std::abs(bell_negativity - 1.0) <= 1e-10;
        results.push_back({7, "correlation-sanity", pass,
                           fmt("product max |D|,|I| = %.2e (tol 1e-6), D(I/6) = %.2e, C+D=I %s, "
                               "Bell negativity error %.2e (tol 1e-10)",
                               worst_product, std::abs(mixed.discord),
                               identity_exact ? "bit-exact" : "VIOLATED",
                               std::abs(bell_negativity - 1.0))});
    }

    // --- 8: optimizer vs exhaustive 721x1441 oracle ----------------------
    {
        const auto start = Clock::now();
        struct Case {
            double p, gamma;
        };
        const std::vector<Case> cases{{0.15, 1.0}, {0.15, 0.5}, {0.15, 0.1},
                                      {0.23, 1.0}, {0.23, 0.5}, {0.23, 0.1}};
        std::vector<std::future<double>> brute;
        for (const Case& c : cases) {
            brute.push_back(std::async(std::launch::async, [c] {
                const DensityMatrix rho = evolve_closed_form(family_state(c.p), c.gamma);
                return oracle::brute_force_min_conditional_entropy(rho, 721, 1441);
            }));
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const DensityMatrix rho = evolve_closed_form(family_state(cases[i].p), cases[i].gamma);
            const double s_b =
                von_neumann_entropy(partial_trace(rho.matrix(), rho.index(), Subsystem::B));
            const double production = s_b - classical_correlation(rho).value;
            worst = std::max(worst, std::abs(production - brute[i].get()));
        }
        const double secs = seconds_since(start);
        const bool pass = worst <= 1e-4 && secs <= 600.0;
        results.push_back({8, "optimizer-oracle", pass,
                           fmt("max |production - brute force| = %.2e over 6 cases (tol 1e-4), "
                               "%.1f s (limit 600 s)",
                               worst, secs)});
    }

    int failures = 0;
    for (const Criterion& c : results) {
        if (!c.pass) ++failures;
        std::printf("[%s] criterion %d %-22s %s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), c.detail.c_str());
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures;
}
