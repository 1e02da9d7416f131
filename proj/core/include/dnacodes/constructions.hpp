#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dnacodes/code.hpp"
#include "dnacodes/numeric.hpp"
#include "dnacodes/sequence.hpp"

namespace dnacodes {

/// Exhaustive scans refuse above this many states unless the caller raises
/// the cap.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 26;

/// Which branch of a construction produced the result (wire names used in
/// reports): T31-odd-k and T31-power-of-two and T31-even-k are the three
/// parameter cases of the orbit construction, T32 is composition
/// symmetrization.
enum class ConstructionCase { odd_k, power_of_two, even_k, symmetrize };

std::string_view to_string(ConstructionCase c);

struct ConstructionReport {
    DnaCode code;
    ConstructionCase case_used = ConstructionCase::odd_k;
    /// Nominal size for the parameter case.  Exact for odd k and for the
    /// power-of-two case, a lower bound for even k, and the input size for
    /// symmetrization.  Kept as an exact rational: the even-k formula is not
    /// always an integer.
    BigRat claimed_size;
    std::size_t achieved_size = 0;
    /// Result of running the full validator on the returned code.
    bool validated = false;
    std::vector<std::string> notes;
};

/// Builds a block DNA (n, 1)-code inside the zero-parity code by classifying
/// cyclic-shift orbits, for n a multiple of q.  Orbits pairing with a
/// disjoint reverse-complement orbit contribute an independent set of shifts
/// together with its mirror image; self-reverse-complementary orbits of size
/// divisible by four contribute their odd shifts; the two-element
/// self-reverse-complementary orbits are dropped.  Constant words are
/// included except in the even-k case, which restricts to orbits of full
/// size n.
///
/// Parameter cases, with k = n / q:
///   odd k           claimed size (q^(n-1) + q) / 2, met when every orbit
///                   size is even
///   q and n powers  claimed size q^(n-1) / 2, always met
///   of two
///   even k          claimed lower bound (q^(n-1) - (q^(n/2+1) - 1)/(q - 1)) / 2
///
/// Any shortfall against the claim (odd-size orbits lose one shift each) is
/// recorded in the notes rather than silently absorbed.
ConstructionReport construct_orbit_code(int q, int n,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// The class T(beta, gamma) of the Tenengolts partition, a single-deletion
/// code of length n over the even alphabet of size q.
std::vector<QarySequence> tenengolts_code(int q, int n, int beta, int gamma,
                                          std::uint64_t cap = kDefaultEnumerationCap);

struct TenengoltsBest {
    int gamma = 0;
    std::vector<QarySequence> code;
};

/// Largest class T(0, gamma) over gamma; ties resolved toward the smallest
/// gamma.  By pigeonhole its size is at least q^(n-1) / n.
TenengoltsBest best_tenengolts_class(int q, int n,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Turns a single-deletion code T inside the zero-parity code (length n = qk,
/// k odd) into a deletion DNA (n, 1)-code: group T by letter composition,
/// keep the larger of each composition/mirror-composition pair (ties toward
/// the lexicographically smaller composition), and close the kept groups
/// under reverse complement.  The result has at least |T| codewords.
ConstructionReport symmetrize_to_dna_code(std::span<const QarySequence> deletion_code);

/// q^(n-1) / n, the guaranteed size of the code obtained by symmetrizing the
/// best Tenengolts class; needs n = qk with k odd.
BigRat deletion_dna_size_lower_bound(int q, int n);

}  // namespace dnacodes
