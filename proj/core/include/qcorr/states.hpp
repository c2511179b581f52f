#ifndef QCORR_STATES_HPP
#define QCORR_STATES_HPP

#include <random>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

/// Parameter of the one-parameter qubit-qutrit family; valid range [0, 0.5].
class FamilyParameter {
public:
    FamilyParameter() = default;
    explicit FamilyParameter(double value);
    double value() const { return value_; }

private:
    double value_ = 0.0;
};

/// A validated bipartite density matrix: Hermitian to 1e-12, unit trace to
/// 1e-12, and positive semidefinite down to -1e-10 on the smallest
/// eigenvalue.  The two-tier tolerances separate construction bugs from
/// accumulated roundoff.  Instances are immutable; construct through
/// validate() or one of the state factories.
class DensityMatrix {
public:
    static constexpr double kHermiticityTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPositivityTol = 1e-10;

    const ComplexMatrix& matrix() const { return matrix_; }
    const BipartiteIndex& index() const { return idx_; }
    std::size_t dim() const { return idx_.dim(); }

private:
    DensityMatrix(ComplexMatrix m, BipartiteIndex idx)
        : matrix_(std::move(m)), idx_(idx) {}
    friend DensityMatrix validate(ComplexMatrix rho, const BipartiteIndex& idx);

    ComplexMatrix matrix_;
    BipartiteIndex idx_;
};

/// Check Hermiticity, trace and positivity; throws NonHermitian, TraceNotOne
/// or NotPositive on failure.
DensityMatrix validate(ComplexMatrix rho, const BipartiteIndex& idx);

/// The one-parameter family of entangled qubit-qutrit mixed states.  In the
/// product basis (|00>,|01>,|02>,|10>,|11>,|12>) the nonzero entries are
///   diagonal: (p/2, p/2, (1-2p)/2, (1-2p)/2, p/2, p/2)
///   rho(0,5) = rho(5,0) = p/2
///   rho(1,4) = rho(4,1) = p/2
///   rho(2,3) = rho(3,2) = (1-2p)/2
/// The state is separable exactly at p = 1/3.
DensityMatrix family_state(FamilyParameter p);
inline DensityMatrix family_state(double p) { return family_state(FamilyParameter(p)); }

DensityMatrix maximally_mixed(const BipartiteIndex& idx);

/// Tensor product of two single-subsystem density matrices (each validated
/// as Hermitian, unit-trace, PSD before combining).
DensityMatrix product_state(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b);

/// Deterministic pseudo-random full-rank state, rho = G G^dagger / Tr(G G^dagger)
/// with G drawn entrywise from the given generator.  Test/verification fixture.
DensityMatrix random_state(const BipartiteIndex& idx, std::mt19937_64& rng);

} // namespace qcorr

#endif
