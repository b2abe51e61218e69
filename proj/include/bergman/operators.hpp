#pragma once

#include <span>
#include <string>

#include "bergman/atomic_measure.hpp"
#include "bergman/matrix.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

// n x n compression of an operator to span{e_0..e_{n-1}} in the basis
// e_m(z) = sqrt(m+1) z^m.  Column k holds the coefficients of T e_k,
// i.e. entries(l,k) = <T e_k, e_l>.
struct TruncatedOperator {
    std::size_t dim;
    ComplexMatrix entries;
    std::string provenance;
};

struct RankReport {
    std::vector<double> singular_values;  // non-increasing
    double tolerance;                     // relative threshold
    std::size_t rank;                     // #{i : sigma_i > tolerance * sigma_0}
};

// Matrix elements 2 sqrt((k+1)(l+1)) integral_0^1 f_{l-k}(r) r^{k+l+1} dr.
// The factor 2 is the mass-1 normalization of area measure; it makes T_1 the
// identity and the radial diagonal equal omega(f, k).  Entries for absent
// modes are structural zeros.
TruncatedOperator toeplitz_matrix(const Symbol& f, std::size_t n);

// Sesquilinear form of an atomic measure:
// entries(l,k) = sqrt((k+1)(l+1)) sum_j c_j z_j^k conj(z_j)^l.
TruncatedOperator measure_matrix(const AtomicMeasure& nu, std::size_t n);

// Matrix product of compressions, applied left to right.  Note this equals
// the compression of the operator product only when all factors but at most
// one are diagonal; general products may carry truncation artifacts.
TruncatedOperator multiply(std::span<const TruncatedOperator> ops);

std::vector<cplx> apply(const TruncatedOperator& a, const std::vector<cplx>& v);

RankReport numerical_rank(const TruncatedOperator& a, double tol);
RankReport numerical_rank(const ComplexMatrix& a, double tol);

// Diagonal compression diag(omega(u, 0..n-1)) of a radial symbol.
TruncatedOperator radial_diagonal(const RadialProfile& u, std::size_t n);

}  // namespace bergman
