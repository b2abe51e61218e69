#include "bergman/atomic_measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bergman {

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms, std::optional<double> radius_bound)
    : atoms_(std::move(atoms)) {
    double max_abs = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].weight == cplx{0.0, 0.0}) {
            throw std::invalid_argument("atomic measure: zero weight");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (atoms_[i].location == atoms_[j].location) {
                throw std::invalid_argument("atomic measure: duplicate atom location");
            }
        }
        max_abs = std::max(max_abs, std::abs(atoms_[i].location));
    }
    if (radius_bound.has_value()) {
        if (*radius_bound <= 0.0) {
            throw std::invalid_argument("atomic measure: radius bound must be positive");
        }
        if (max_abs > *radius_bound) {
            throw std::invalid_argument("atomic measure: atom outside radius bound");
        }
        radius_bound_ = *radius_bound;
    } else {
        radius_bound_ = max_abs > 0.0 ? max_abs : 1.0;
    }
}

bool AtomicMeasure::has_origin_atom() const {
    for (const auto& a : atoms_) {
        if (a.location == cplx{0.0, 0.0}) return true;
    }
    return false;
}

std::string AtomicMeasure::describe() const {
    std::ostringstream out;
    out << "measure{" << atoms_.size() << " atoms, R=" << radius_bound_ << "}";
    return out.str();
}

}  // namespace bergman
