#pragma once

#include <map>
#include <string>
#include <vector>

#include "bergman/radial_profile.hpp"

namespace bergman {

// Symbol on the unit disk in mode-decomposed form:
//   f(r e^{i theta}) = sum_m u_m(r) e^{i m theta},
// with finitely many modes, each a polynomial radial factor.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::map<int, RadialProfile> modes);

    static Symbol radial(const RadialProfile& profile);

    const std::map<int, RadialProfile>& modes() const { return modes_; }
    bool is_zero() const { return modes_.empty(); }
    bool is_radial() const;

    // Zero profile when the mode is absent.
    const RadialProfile& mode(int m) const;

    int min_mode() const;  // requires non-zero symbol
    int max_mode() const;  // requires non-zero symbol

    cplx eval(double r, double theta) const;

    std::string describe() const;

private:
    std::map<int, RadialProfile> modes_;
};

struct BipolyTerm {
    int z_power;     // j in a*z^j*conj(z)^k
    int zbar_power;  // k
    cplx coefficient;
};

// Exact mode extraction for p(z, conj z): the term a*z^j*conj(z)^k lands in
// mode m = j-k with radial factor a*r^{j+k}.
Symbol symbol_from_bipoly(const std::vector<BipolyTerm>& terms);

// Mode m with profile u maps to mode -m with coefficientwise conjugate
// profile, so that the result represents conj(f).
Symbol conjugate_symbol(const Symbol& f);

}  // namespace bergman
