#pragma once

#include <string>
#include <vector>

#include "bergman/radial_profile.hpp"

namespace bergman {

// Diagonal of T_u for a radial symbol u: values[m] = omega(u, m).
struct EigenvalueSequence {
    std::vector<cplx> values;
    std::string source;
};

// Closed form for polynomial profiles: integral_0^1 u(r) r^k dr = sum_j c_j/(j+k+1).
cplx moment(const RadialProfile& u, int k);

// Diagonal eigenvalue of the radial Toeplitz operator,
// omega(u, m) = 2(m+1) integral_0^1 u(t) t^{2m+1} dt.
cplx omega(const RadialProfile& u, int m);

EigenvalueSequence eigenvalue_sequence(const RadialProfile& u, std::size_t n);

// Gauss-Legendre rule on [0,1]; nodes/weights by Newton iteration on the
// Legendre polynomial, converged to 1e-15.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_legendre_01(std::size_t num_nodes);

// Independent quadrature oracle for moment(); exact to roundoff once
// 2*nodes-1 >= deg(u)+k.
cplx quadrature_moment(const RadialProfile& u, int k, std::size_t nodes);

}  // namespace bergman
