#include "bergman/symbol.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace bergman {

Symbol::Symbol(std::map<int, RadialProfile> modes) : modes_(std::move(modes)) {
    for (auto it = modes_.begin(); it != modes_.end();) {
        if (it->second.is_zero()) {
            it = modes_.erase(it);
        } else {
            ++it;
        }
    }
}

Symbol Symbol::radial(const RadialProfile& profile) {
    std::map<int, RadialProfile> m;
    m.emplace(0, profile);
    return Symbol(std::move(m));
}

bool Symbol::is_radial() const {
    return modes_.empty() || (modes_.size() == 1 && modes_.begin()->first == 0);
}

const RadialProfile& Symbol::mode(int m) const {
    static const RadialProfile zero;
    auto it = modes_.find(m);
    return it == modes_.end() ? zero : it->second;
}

int Symbol::min_mode() const {
    if (modes_.empty()) throw std::logic_error("min_mode of zero symbol");
    return modes_.begin()->first;
}

int Symbol::max_mode() const {
    if (modes_.empty()) throw std::logic_error("max_mode of zero symbol");
    return modes_.rbegin()->first;
}

cplx Symbol::eval(double r, double theta) const {
    cplx acc{0.0, 0.0};
    for (const auto& [m, profile] : modes_) {
        acc += profile.eval(r) * std::polar(1.0, m * theta);
    }
    return acc;
}

std::string Symbol::describe() const {
    if (modes_.empty()) return "0";
    std::ostringstream out;
    out << "symbol{";
    bool first = true;
    for (const auto& [m, profile] : modes_) {
        if (!first) out << "; ";
        first = false;
        out << "m=" << m << ":" << profile.describe();
    }
    out << "}";
    return out.str();
}

Symbol symbol_from_bipoly(const std::vector<BipolyTerm>& terms) {
    // Accumulate coefficients per mode; duplicate (j,k) pairs just add up.
    std::map<int, std::vector<cplx>> coeffs;
    for (const auto& t : terms) {
        if (t.z_power < 0 || t.zbar_power < 0) {
            throw std::invalid_argument("bipoly powers must be non-negative");
        }
        const int m = t.z_power - t.zbar_power;
        const std::size_t rpow = static_cast<std::size_t>(t.z_power + t.zbar_power);
        auto& c = coeffs[m];
        if (c.size() <= rpow) c.resize(rpow + 1, cplx{0.0, 0.0});
        c[rpow] += t.coefficient;
    }
    std::map<int, RadialProfile> modes;
    for (auto& [m, c] : coeffs) {
        modes.emplace(m, RadialProfile(std::move(c)));
    }
    return Symbol(std::move(modes));
}

Symbol conjugate_symbol(const Symbol& f) {
    std::map<int, RadialProfile> modes;
    for (const auto& [m, profile] : f.modes()) {
        modes.emplace(-m, profile.conjugated());
    }
    return Symbol(std::move(modes));
}

}  // namespace bergman
