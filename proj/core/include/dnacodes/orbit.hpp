#pragma once

#include <string_view>
#include <vector>

#include "dnacodes/sequence.hpp"

namespace dnacodes {

/// How a cyclic-shift orbit sits relative to reverse complementation.
///
///   G1  constant words (orbit size 1)
///   G2  orbit of size 2 containing a self-reverse-complementary word
///   G3  orbit of size >= 4 containing a self-reverse-complementary word
///   G4  orbit disjoint from its reverse-complement orbit
///
/// This classification is exhaustive: an orbit that meets its reverse
/// complement but has no self-reverse-complementary member cannot occur.
enum class OrbitClass { G1, G2, G3, G4 };

std::string_view to_string(OrbitClass cls);

struct Orbit {
    /// Consecutive left shifts starting from the lexicographically least
    /// member, so members[k] = cyclic_shift(members[0], k).
    std::vector<QarySequence> members;
    OrbitClass cls = OrbitClass::G1;
    /// For G4 only: the reverse-complement orbit in the same canonical order.
    std::vector<QarySequence> partner;

    std::size_t size() const noexcept { return members.size(); }
    const QarySequence& canonical() const { return members.front(); }
};

Orbit orbit_of(const QarySequence& x);

}  // namespace dnacodes
