#pragma once

#include <complex>
#include <string>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

// Polynomial u(r) = sum_j c_j r^j on [0,1).  Coefficients are stored
// canonicalized: trailing exact zeros are stripped, so the zero profile
// has an empty coefficient vector.
class RadialProfile {
public:
    RadialProfile() = default;
    explicit RadialProfile(std::vector<cplx> coeffs);

    const std::vector<cplx>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero profile is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    cplx eval(double r) const;
    RadialProfile conjugated() const;
    RadialProfile scaled(cplx factor) const;
    RadialProfile plus(const RadialProfile& other) const;

    std::string describe() const;

    bool operator==(const RadialProfile& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<cplx> coeffs_;
};

RadialProfile make_radial_polynomial(const std::vector<cplx>& coeffs);

}  // namespace bergman
