#include "bergman/radial_profile.hpp"

#include <sstream>
#include <utility>

namespace bergman {

RadialProfile::RadialProfile(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == cplx{0.0, 0.0}) {
        coeffs_.pop_back();
    }
}

cplx RadialProfile::eval(double r) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * r + *it;
    }
    return acc;
}

RadialProfile RadialProfile::conjugated() const {
    std::vector<cplx> c(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        c[j] = std::conj(coeffs_[j]);
    }
    return RadialProfile(std::move(c));
}

RadialProfile RadialProfile::scaled(cplx factor) const {
    std::vector<cplx> c(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        c[j] = factor * coeffs_[j];
    }
    return RadialProfile(std::move(c));
}

RadialProfile RadialProfile::plus(const RadialProfile& other) const {
    std::vector<cplx> c(std::max(coeffs_.size(), other.coeffs_.size()), cplx{0.0, 0.0});
    for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[j] += other.coeffs_[j];
    return RadialProfile(std::move(c));
}

std::string RadialProfile::describe() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    out << "poly[";
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (j > 0) out << ",";
        out << "(" << coeffs_[j].real() << "," << coeffs_[j].imag() << ")";
    }
    out << "]";
    return out.str();
}

RadialProfile make_radial_polynomial(const std::vector<cplx>& coeffs) {
    return RadialProfile(coeffs);
}

}  // namespace bergman
