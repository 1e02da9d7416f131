#include "dnacodes/orbit.hpp"

#include <algorithm>

namespace dnacodes {

namespace {

// All shifts of x as consecutive rotations, reordered to start at the
// lexicographically least one.
std::vector<QarySequence> canonical_orbit(const QarySequence& x) {
    std::vector<QarySequence> shifts;
    shifts.push_back(x);
    for (QarySequence cur = cyclic_shift(x, 1); cur != x; cur = cyclic_shift(cur, 1))
        shifts.push_back(cur);
    auto min_it = std::min_element(shifts.begin(), shifts.end());
    std::rotate(shifts.begin(), min_it, shifts.end());
    return shifts;
}

}  // namespace

std::string_view to_string(OrbitClass cls) {
    switch (cls) {
        case OrbitClass::G1: return "G1";
        case OrbitClass::G2: return "G2";
        case OrbitClass::G3: return "G3";
        case OrbitClass::G4: return "G4";
    }
    return "?";
}

Orbit orbit_of(const QarySequence& x) {
    Orbit o;
    o.members = canonical_orbit(x);

    const bool has_self_rc = std::any_of(o.members.begin(), o.members.end(),
                                         [](const QarySequence& m) {
                                             return is_self_reverse_complementary(m);
                                         });
    if (o.members.size() == 1) {
        o.cls = OrbitClass::G1;
    } else if (has_self_rc) {
        o.cls = o.members.size() == 2 ? OrbitClass::G2 : OrbitClass::G3;
    } else {
        o.cls = OrbitClass::G4;
        o.partner = canonical_orbit(reverse_complement(o.members.front()));
    }
    return o;
}

}  // namespace dnacodes
