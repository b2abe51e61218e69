#include "bergman/prescribe_zero_set.hpp"

#include <cmath>
#include <stdexcept>

#include "bergman/matrix.hpp"

namespace bergman {

RadialProfile prescribe_zero_set(const std::set<int>& zero_indices, std::size_t degree) {
    for (int s : zero_indices) {
        if (s < 0) throw std::invalid_argument("prescribe_zero_set: negative index");
    }
    if (degree < zero_indices.size()) {
        throw std::invalid_argument(
            "prescribe_zero_set: degree must be at least the number of prescribed zeros");
    }
    if (zero_indices.empty()) {
        return make_radial_polynomial({cplx{1.0, 0.0}});
    }

    // omega(u, s) = 0  <=>  sum_j c_j / (j + 2s + 2) = 0.
    ComplexMatrix constraints(zero_indices.size(), degree + 1);
    std::size_t row = 0;
    for (int s : zero_indices) {
        for (std::size_t j = 0; j <= degree; ++j) {
            constraints(row, j) = cplx{1.0 / static_cast<double>(j + 2 * s + 2), 0.0};
        }
        ++row;
    }

    std::vector<cplx> coeffs = smallest_right_singular_vector(constraints);
    std::size_t arg = 0;
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        if (std::abs(coeffs[j]) > std::abs(coeffs[arg])) arg = j;
    }
    const cplx pivot = coeffs[arg];
    if (pivot == cplx{0.0, 0.0}) {
        throw std::runtime_error("prescribe_zero_set: degenerate nullspace vector");
    }
    for (auto& c : coeffs) c /= pivot;
    return RadialProfile(std::move(coeffs));
}

}  // namespace bergman
