#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kOffDiagonalThreshold = 1e-12;
constexpr int kSweepBudget = 100;

double max_off_diagonal(const ComplexMatrix& a) {
    double m = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            m = std::max(m, std::abs(a(p, q)));
    return m;
}

// Cyclic Jacobi for Hermitian matrices.  Each rotation zeroes one
// off-diagonal pair (p,q) with the unitary
//   U = [[c, -s e^{i a}], [s e^{-i a}, c]]   (acting on coordinates p,q)
// where A(p,q) = r e^{i a} and t = s/c is the smaller-magnitude root of
// t^2 - 2 tau t - 1 = 0, tau = (A(q,q)-A(p,p)) / 2r.  `vectors`, when
// non-null, accumulates V <- V U so that A_in = V diag(A_out) V^dagger.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* vectors) {
    const std::size_t n = a.rows();
    // Absolute threshold, scaled up for matrices with entries far above unit
    // magnitude so the stopping rule stays reachable at machine precision.
    const double threshold = kOffDiagonalThreshold * std::max(1.0, a.max_abs());

    for (int sweep = 0; sweep < kSweepBudget; ++sweep) {
        if (max_off_diagonal(a) <= threshold) return;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double r = std::abs(b);
                if (r == 0.0) continue;

                const Complex phase = b / r;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                     : 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                a(p, p) = app * c * c + 2.0 * r * c * s + aqq * s * s;
                a(q, q) = app * s * s - 2.0 * r * c * s + aqq * c * c;
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    const Complex new_kp = akp * c + akq * s * std::conj(phase);
                    const Complex new_kq = -akp * s * phase + akq * c;
                    a(k, p) = new_kp;
                    a(p, k) = std::conj(new_kp);
                    a(k, q) = new_kq;
                    a(q, k) = std::conj(new_kq);
                }

                if (vectors) {
                    ComplexMatrix& v = *vectors;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = vkp * c + vkq * s * std::conj(phase);
                        v(k, q) = -vkp * s * phase + vkq * c;
                    }
                }
            }
        }
    }
    if (max_off_diagonal(a) > threshold) {
        throw NoConvergence("hermitian_eigen: Jacobi sweep budget exhausted");
    }
}

ComplexMatrix symmetrized(const ComplexMatrix& m, double tol, const char* caller) {
    if (!m.is_square()) {
        throw DimensionMismatch(std::string(caller) + ": matrix not square");
    }
    if (m.hermiticity_defect() > tol) {
        throw NonHermitian(std::string(caller) + ": symmetry check failed");
    }
    ComplexMatrix h(m.rows(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return h;
}

} // namespace

HermitianSpectrum hermitian_eigen(const ComplexMatrix& m, double tol) {
    ComplexMatrix a = symmetrized(m, tol, "hermitian_eigen");
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_diagonalize(a, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        spec.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) spec.eigenvectors(r, c) = v(r, order[c]);
    }
    return spec;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
    ComplexMatrix a = symmetrized(m, tol, "hermitian_eigenvalues");
    jacobi_diagonalize(a, nullptr);
    std::vector<double> values(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) values[i] = a(i, i).real();
    std::sort(values.begin(), values.end());
    return values;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteIndex& idx, Subsystem keep) {
    const std::size_t d = idx.dim();
    if (rho.rows() != d || rho.cols() != d) {
        throw DimensionMismatch("partial_trace: operator does not match composite dimension");
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out(idx.dim_a, idx.dim_a);
        for (std::size_t i = 0; i < idx.dim_a; ++i)
            for (std::size_t ip = 0; ip < idx.dim_a; ++ip) {
                Complex sum = 0.0;
                for (std::size_t j = 0; j < idx.dim_b; ++j)
                    sum += rho(idx.composite(i, j), idx.composite(ip, j));
                out(i, ip) = sum;
            }
        return out;
    }
    ComplexMatrix out(idx.dim_b, idx.dim_b);
    for (std::size_t j = 0; j < idx.dim_b; ++j)
        for (std::size_t jp = 0; jp < idx.dim_b; ++jp) {
            Complex sum = 0.0;
            for (std::size_t i = 0; i < idx.dim_a; ++i)
                sum += rho(idx.composite(i, j), idx.composite(i, jp));
            out(j, jp) = sum;
        }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteIndex& idx, Subsystem on) {
    const std::size_t d = idx.dim();
    if (rho.rows() != d || rho.cols() != d) {
        throw DimensionMismatch("partial_transpose: operator does not match composite dimension");
    }
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < idx.dim_a; ++i)
        for (std::size_t j = 0; j < idx.dim_b; ++j)
            for (std::size_t ip = 0; ip < idx.dim_a; ++ip)
                for (std::size_t jp = 0; jp < idx.dim_b; ++jp) {
                    const std::size_t row = idx.composite(i, j);
                    const std::size_t col = idx.composite(ip, jp);
                    out(row, col) = (on == Subsystem::A)
                                        ? rho(idx.composite(ip, j), idx.composite(i, jp))
                                        : rho(idx.composite(i, jp), idx.composite(ip, j));
                }
    return out;
}

double entropy_term(double x) {
    if (x <= 0.0) return 0.0;
    return -x * std::log2(x);
}

double von_neumann_entropy(const ComplexMatrix& rho, double clamp_tol) {
    if (!rho.is_square()) {
        throw DimensionMismatch("von_neumann_entropy: matrix not square");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > 1e-10) {
        throw TraceNotOne("von_neumann_entropy: trace differs from 1 beyond 1e-10");
    }
    const std::vector<double> lambda = hermitian_eigenvalues(rho, 1e-10);
    double s = 0.0;
    for (double v : lambda) {
        if (v < -clamp_tol) {
            throw NegativeEigenvalue("von_neumann_entropy: eigenvalue below -clamp_tol");
        }
        s += entropy_term(v);
    }
    return s;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.rows(); ++j)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + j, k * b.cols() + l) = aik * b(j, l);
        }
    return out;
}

} // namespace qcorr
