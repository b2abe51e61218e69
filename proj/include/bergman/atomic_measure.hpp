#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergman/radial_profile.hpp"

namespace bergman {

struct Atom {
    cplx location;
    cplx weight;
};

// Finitely supported complex measure sum_j c_j delta_{z_j}, support inside
// the closed disk of radius radius_bound.
class AtomicMeasure {
public:
    AtomicMeasure() : radius_bound_(1.0) {}
    explicit AtomicMeasure(std::vector<Atom> atoms,
                           std::optional<double> radius_bound = std::nullopt);

    const std::vector<Atom>& atoms() const { return atoms_; }
    double radius_bound() const { return radius_bound_; }
    bool has_origin_atom() const;

    std::string describe() const;

private:
    std::vector<Atom> atoms_;
    double radius_bound_;
};

}  // namespace bergman
