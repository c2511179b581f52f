#include "qcorr/states.hpp"

#include <cmath>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

// Uniform double in [-1, 1) from explicit bit manipulation, so the stream is
// identical on every platform (std::uniform_real_distribution is not).
double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0;
}

void check_single_system_state(const ComplexMatrix& rho, const char* which) {
    using std::string;
    if (!rho.is_square()) {
        throw DimensionMismatch(string("product_state: factor ") + which + " not square");
    }
    if (rho.hermiticity_defect() > DensityMatrix::kHermiticityTol) {
        throw NonHermitian(string("product_state: factor ") + which + " not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > DensityMatrix::kTraceTol) {
        throw TraceNotOne(string("product_state: factor ") + which + " trace differs from 1");
    }
    const auto lambda = hermitian_eigenvalues(rho);
    if (lambda.front() < -DensityMatrix::kPositivityTol) {
        throw NotPositive(string("product_state: factor ") + which + " has a negative eigenvalue");
    }
}

} // namespace

FamilyParameter::FamilyParameter(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 0.5)) {
        throw ParameterOutOfRange("family parameter p must lie in [0, 0.5]");
    }
}

DensityMatrix validate(ComplexMatrix rho, const BipartiteIndex& idx) {
    if (rho.rows() != idx.dim() || rho.cols() != idx.dim()) {
        throw DimensionMismatch("validate: matrix does not match composite dimension");
    }
    if (rho.hermiticity_defect() > DensityMatrix::kHermiticityTol) {
        throw NonHermitian("validate: Hermiticity defect exceeds 1e-12");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > DensityMatrix::kTraceTol) {
        throw TraceNotOne("validate: trace differs from 1 beyond 1e-12");
    }
    const auto lambda = hermitian_eigenvalues(rho, DensityMatrix::kHermiticityTol);
    if (lambda.front() < -DensityMatrix::kPositivityTol) {
        throw NotPositive("validate: smallest eigenvalue below -1e-10");
    }
    return DensityMatrix(std::move(rho), idx);
}

DensityMatrix family_state(FamilyParameter p) {
    const double half_p = p.value() / 2.0;
    const double half_q = (1.0 - 2.0 * p.value()) / 2.0;

    ComplexMatrix rho(6, 6);
    rho(0, 0) = half_p;
    rho(1, 1) = half_p;
    rho(2, 2) = half_q;
    rho(3, 3) = half_q;
    rho(4, 4) = half_p;
    rho(5, 5) = half_p;
    rho(0, 5) = rho(5, 0) = half_p;
    rho(1, 4) = rho(4, 1) = half_p;
    rho(2, 3) = rho(3, 2) = half_q;
    return validate(std::move(rho), BipartiteIndex{2, 3});
}

DensityMatrix maximally_mixed(const BipartiteIndex& idx) {
    ComplexMatrix rho = ComplexMatrix::identity(idx.dim());
    rho *= 1.0 / static_cast<double>(idx.dim());
    return validate(std::move(rho), idx);
}

DensityMatrix product_state(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b) {
    check_single_system_state(rho_a, "A");
    check_single_system_state(rho_b, "B");
    return validate(tensor_product(rho_a, rho_b), BipartiteIndex{rho_a.rows(), rho_b.rows()});
}

DensityMatrix random_state(const BipartiteIndex& idx, std::mt19937_64& rng) {
    const std::size_t d = idx.dim();
    ComplexMatrix g(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            g(r, c) = Complex{uniform_pm1(rng), uniform_pm1(rng)};

    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    // Exact re-symmetrization; G G^dagger is Hermitian only up to roundoff.
    for (std::size_t r = 0; r < d; ++r) {
        rho(r, r) = rho(r, r).real();
        for (std::size_t c = r + 1; c < d; ++c) {
            const Complex avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
            rho(r, c) = avg;
            rho(c, r) = std::conj(avg);
        }
    }
    return validate(std::move(rho), idx);
}

} // namespace qcorr
