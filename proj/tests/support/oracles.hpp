#ifndef QCORR_TESTS_SUPPORT_ORACLES_HPP
#define QCORR_TESTS_SUPPORT_ORACLES_HPP

// Independent reference computations for the test and acceptance suites.
// Everything here is derived from closed-form block spectra or from the
// naive full-matrix measurement route, so it never shares code with the
// production paths it checks (the production objective works on cached 3x3
// blocks and never forms the 6x6 sandwich).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace oracle {

inline double hbit(double x) { return x <= 0.0 ? 0.0 : -x * std::log2(x); }

// --- Family-state quantities from 2x2 block spectra --------------------
// The evolved family state is block diagonal over the index pairs
// {0,5}, {1,4}, {2,3}; each block is [[d, c],[c, d]] with eigenvalues d +- c.

inline std::array<double, 6> family_spectrum(double p, double gamma) {
    const double q = 1.0 - 2.0 * p;
    return {0.5 * p * (1.0 + gamma), 0.5 * p * (1.0 - gamma),
            0.0, p,
            0.5 * q * (1.0 + gamma), 0.5 * q * (1.0 - gamma)};
}

inline double family_entropy(double p, double gamma) {
    double s = 0.0;
    for (double lambda : family_spectrum(p, gamma)) s += hbit(lambda);
    return s;
}

// Qubit marginal [[1/2, p/2],[p/2, 1/2]]: eigenvalues (1 +- p)/2.
inline double family_qubit_entropy(double p) {
    return hbit(0.5 * (1.0 + p)) + hbit(0.5 * (1.0 - p));
}

// Qutrit marginal diag((1-p)/2, p, (1-p)/2); untouched by the dephasing.
inline double family_qutrit_entropy(double p) {
    return 2.0 * hbit(0.5 * (1.0 - p)) + hbit(p);
}

inline double family_mutual_information(double p, double gamma) {
    return family_qubit_entropy(p) + family_qutrit_entropy(p) - family_entropy(p, gamma);
}

// Partial-transpose block spectra: {0,5}: p/2 +- q*gamma/2, {1,4}: 0 and p,
// {2,3}: q/2 +- p*gamma/2, with q = 1-2p.  At most one block dips negative.
inline double family_negativity(double p, double gamma) {
    const double q = 1.0 - 2.0 * p;
    return std::max(0.0, q * gamma - p) + std::max(0.0, p * gamma - q);
}

// Gamma*t at which the negative partial-transpose eigenvalue reaches zero;
// infinity when entanglement only vanishes asymptotically (p = 0, p = 0.5).
inline double family_death_time(double p) {
    const double q = 1.0 - 2.0 * p;
    if (p == 0.0 || q == 0.0) return std::numeric_limits<double>::infinity();
    const double ratio = std::max(q / p, p / q);
    return 2.0 * std::log(ratio);
}

// Conditional entropy of the x-axis measurement (theta = pi/2, phi = 0):
// outcome blocks have eigenvalues {p(1 +- n_x)/2, (1-p)(1 +- gamma)/4} and
// outcome probabilities (1 +- p)/2.
inline double axis_x_conditional_entropy(double p, double gamma) {
    const double a = 0.25 * (1.0 - p);
    return hbit(p) + 2.0 * hbit(a * (1.0 + gamma)) + 2.0 * hbit(a * (1.0 - gamma)) -
           hbit(0.5 * (1.0 + p)) - hbit(0.5 * (1.0 - p));
}

// Conditional entropy of the z-axis measurement; gamma-independent because
// the outcome blocks are diagonal.
inline double axis_z_conditional_entropy(double p) {
    return hbit(1.0 - 2.0 * p) + 2.0 * hbit(p);
}

// --- Naive measurement route -------------------------------------------
// Full (P (x) I) rho (P (x) I) sandwich, explicit partial trace and
// normalized conditional entropies; deliberately the textbook route.

inline double naive_conditional_entropy(const qcorr::DensityMatrix& rho, double theta,
                                        double phi) {
    using qcorr::Complex;
    using qcorr::ComplexMatrix;
    const auto& idx = rho.index();
    const std::size_t da = idx.dim_a, db = idx.dim_b;

    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    ComplexMatrix proj(2, 2);
    proj(0, 0) = 0.5 * (1.0 + nz);
    proj(1, 1) = 0.5 * (1.0 - nz);
    proj(0, 1) = Complex{0.5 * nx, -0.5 * ny};
    proj(1, 0) = Complex{0.5 * nx, 0.5 * ny};

    double total = 0.0;
    for (int outcome = 0; outcome < 2; ++outcome) {
        const ComplexMatrix lifted = qcorr::tensor_product(proj, ComplexMatrix::identity(db));
        const ComplexMatrix sandwich = lifted * rho.matrix() * lifted;

        ComplexMatrix conditional(db, db);
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t jp = 0; jp < db; ++jp) {
                Complex sum = 0.0;
                for (std::size_t i = 0; i < da; ++i)
                    sum += sandwich(idx.composite(i, j), idx.composite(i, jp));
                conditional(j, jp) = sum;
            }
        const double pk = conditional.trace().real();
        if (pk > 1e-12) {
            conditional *= 1.0 / pk;
            double s = 0.0;
            for (double mu : qcorr::hermitian_eigenvalues(conditional, 1e-8)) s += hbit(mu);
            total += pk * s;
        }
        proj = ComplexMatrix::identity(2) - proj;
    }
    return total;
}

// Exhaustive minimum over an inclusive n_theta x n_phi grid on
// [0, pi] x [0, 2*pi].
inline double brute_force_min_conditional_entropy(const qcorr::DensityMatrix& rho,
                                                  std::size_t n_theta, std::size_t n_phi) {
    const double pi = 3.14159265358979323846;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta = static_cast<double>(i) * pi / static_cast<double>(n_theta - 1);
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi = static_cast<double>(j) * 2.0 * pi / static_cast<double>(n_phi - 1);
            best = std::min(best, naive_conditional_entropy(rho, theta, phi));
        }
    }
    return best;
}

// --- Deterministic random inputs ----------------------------------------

inline double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

inline qcorr::ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    qcorr::ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = qcorr::Complex{uniform_pm1(rng), uniform_pm1(rng)};
    qcorr::ComplexMatrix h = a + a.adjoint();
    h *= 0.5;
    // Force the exact symmetry the generator only guarantees up to roundoff.
    for (std::size_t r = 0; r < n; ++r) {
        h(r, r) = h(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) h(c, r) = std::conj(h(r, c));
    }
    return h;
}

} // namespace oracle

#endif
