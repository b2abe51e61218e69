#pragma once

#include <cstddef>
#include <vector>

#include "bergman/radial_profile.hpp"

namespace bergman {

// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    double frobenius_norm() const;

    bool operator==(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& v);

// Thin SVD A = U diag(sigma) V^H with sigma sorted non-increasing.
// Columns of U corresponding to sigma = 0 are left as zero vectors.
struct SvdResult {
    ComplexMatrix u;            // rows(A) x cols(A)
    std::vector<double> sigma;  // cols(A)
    ComplexMatrix v;            // cols(A) x cols(A)
};

// One-sided Jacobi, requires rows >= cols.  Sweeps rotate column pairs
// until every pair is orthogonal to 1e-14 relative; capped at 60 sweeps,
// throws SvdError carrying the residual off-diagonal norm past the cap.
SvdResult jacobi_svd(const ComplexMatrix& a);

struct SvdError : std::runtime_error {
    explicit SvdError(const std::string& msg, double residual_)
        : std::runtime_error(msg), residual(residual_) {}
    double residual;
};

// Minimum-norm least squares via the SVD pseudoinverse.
struct LeastSquaresResult {
    std::vector<cplx> solution;
    double residual;
};
LeastSquaresResult least_squares(const ComplexMatrix& a, const std::vector<cplx>& b,
                                 double rcond = 1e-13);

// Right singular vector of smallest singular value; rows < cols is allowed
// (the matrix is padded with zero rows internally).
std::vector<cplx> smallest_right_singular_vector(const ComplexMatrix& a);

// Eigenvalues of a Hermitian matrix by two-sided Jacobi, sorted descending.
// Independent of jacobi_svd; used as a cross-check route for PSD matrices.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

}  // namespace bergman
