#ifndef QCORR_COMPLEX_MATRIX_HPP
#define QCORR_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage.  The workhorse value type for
/// density matrices, Kraus operators and projectors; dimensions in this
/// library never exceed a handful, so everything is stored densely.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    /// Square matrix with the given main diagonal.
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);
    ComplexMatrix& operator*=(double scalar);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    /// Largest entry magnitude (the max norm used by the tolerance checks).
    double max_abs() const;
    double frobenius_norm() const;

    /// max |M - M^dagger| over all entries; 0 for exactly Hermitian input.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(double scalar, ComplexMatrix m);

/// max |A - B| over all entries; both operands must have equal dimensions.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qcorr

#endif
