#ifndef QCORR_LINALG_HPP
#define QCORR_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

/// Composite-index bookkeeping for a bipartite system in the product basis
/// {|ij>}: the composite index of |ij> is k = i*dim_b + j, i.e. the first
/// (dimension dim_a) subsystem is the major index.
struct BipartiteIndex {
    std::size_t dim_a = 2;
    std::size_t dim_b = 3;

    std::size_t dim() const { return dim_a * dim_b; }
    std::size_t composite(std::size_t i, std::size_t j) const { return i * dim_b + j; }
};

enum class Subsystem { A, B };

/// Result of a Hermitian eigendecomposition: M = V diag(lambda) V^dagger with
/// eigenvalues sorted ascending and orthonormal eigenvector columns.
struct HermitianSpectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Full eigendecomposition of a Hermitian matrix via cyclic complex Jacobi
/// rotations.  `tol` bounds the accepted Hermiticity defect of the input
/// (NonHermitian beyond it); the rotation sweep stops once every off-diagonal
/// magnitude falls below an absolute threshold of 1e-12, with a budget of 100
/// sweeps (NoConvergence beyond that).
HermitianSpectrum hermitian_eigen(const ComplexMatrix& m, double tol = 1e-10);

/// Eigenvalues only (ascending); same algorithm without accumulating vectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol = 1e-10);

/// Trace out one subsystem of a (dim_a*dim_b)-dimensional operator.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteIndex& idx, Subsystem keep);

/// Transpose the indices of one subsystem only:
/// on A, out_{(i j),(i' j')} = rho_{(i' j),(i j')}.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteIndex& idx, Subsystem on);

/// S(rho) = -sum_i lambda_i log2 lambda_i in bits, with 0*log0 = 0.
/// Eigenvalues in [-clamp_tol, 0] are treated as exact zeros; anything below
/// -clamp_tol raises NegativeEigenvalue.
double von_neumann_entropy(const ComplexMatrix& rho, double clamp_tol = 1e-10);

/// Kronecker product, (A (x) B)_{(i j),(k l)} = A_{ik} B_{jl}.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// -x log2 x with the 0*log0 = 0 convention; negative inputs clamp to 0.
double entropy_term(double x);

} // namespace qcorr

#endif
