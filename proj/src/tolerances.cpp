#include "transmute/tolerances.hpp"

namespace transmute {

bool Tolerances::set(std::string_view name, double value) noexcept {
    struct Entry {
        std::string_view name;
        double Tolerances::*field;
    };
    static constexpr Entry entries[] = {
        {"pole_proximity", &Tolerances::pole_proximity},
        {"unitarity_sign", &Tolerances::unitarity_sign},
        {"phase_unitarity", &Tolerances::phase_unitarity},
        {"group_property", &Tolerances::group_property},
        {"anchor_independence", &Tolerances::anchor_independence},
        {"residue", &Tolerances::residue},
        {"target_length_agreement", &Tolerances::target_length_agreement},
        {"pole_search", &Tolerances::pole_search},
        {"quadrature_rel", &Tolerances::quadrature_rel},
        {"quadrature_abs", &Tolerances::quadrature_abs},
    };
    if (!(value > 0.0)) {
        return false;
    }
    for (const auto& e : entries) {
        if (e.name == name) {
            this->*e.field = value;
            return true;
        }
    }
    return false;
}

}  // namespace transmute
