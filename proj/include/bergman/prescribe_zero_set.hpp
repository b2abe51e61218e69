#pragma once

#include <set>

#include "bergman/radial_profile.hpp"

namespace bergman {

// Builds a nonzero polynomial profile u of the given degree with
// omega(u, s) = 0 for every s in the set, by extracting a nullspace vector
// of the moment constraint system.  Requires degree >= |set| so the
// homogeneous system has a nonzero solution; the result is normalized so
// its largest-magnitude coefficient is 1.
RadialProfile prescribe_zero_set(const std::set<int>& zero_indices, std::size_t degree);

}  // namespace bergman
