#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacodes/constructions.hpp"
#include "dnacodes/numeric.hpp"
#include "dnacodes/similarity.hpp"

namespace dnacodes {

/// How a reported number was obtained.  exact is reserved for integer or
/// rational formulas evaluated without approximation; analytic_bound marks a
/// closed-form inequality valid at the given parameters; asymptotic marks a
/// leading-order estimate with no vanishing-term control.
enum class BoundMode { exact, analytic_bound, asymptotic };

std::string_view to_string(BoundMode mode);

struct BoundReport {
    std::string name;
    BoundMode mode = BoundMode::exact;
    double value = 0.0;
    std::optional<BigRat> exact;  // set when the computation was exact
    /// For lower bounds: the hypothesis failed and the bound degraded to 0.
    bool vacuous = false;
    std::vector<std::pair<std::string, std::string>> params;  // ordered (key, value)
};

/// Root d* of the rate lower bound for the given kind, with the achieved
/// residual |R(d*)|.  boundary marks the block case where the bound stays
/// positive on all of (0, 1/2) and d* saturates at 1/2.
struct CriticalPoint {
    int q = 0;
    SimilarityKind kind = SimilarityKind::deletion;
    double d_star = 0.0;
    double residual = 0.0;
    bool boundary = false;
};

/// Base-q entropy h_q(u) = -u log_q u - (1-u) log_q (1-u), with h_q(0) =
/// h_q(1) = 0.
double entropy(int q, double u);

/// Number of length-n supersequences of a fixed word of length s over q
/// letters: sum_{k=0}^{n-s} C(n,k) (q-1)^k.  Independent of which word.
BigInt insertion_count(int q, int n, int s);

/// max_j C(s-1, j-1) * C(n-s+1, j)^2, the peak term of the block pair count.
BigInt bmax(int n, int s);

/// Upper bounds on the two level counts behind the random-coding argument,
/// for deletion or block similarity:
///   pair_bound    |{(x, y) : S(x, y) = s}|        over ordered pairs
///   selfrc_bound  |{x : S(x, rc(x)) = s}|
/// selfrc_bound is 0 for odd s: a word and its reverse complement can only
/// share common parts of even length.  Tail counts are obtained by summing
/// these over the levels above the threshold.
struct CountingBounds {
    BigInt pair_bound;
    BigInt selfrc_bound;
};

CountingBounds counting_bounds(int q, int n, int s, SimilarityKind kind);

/// Size guarantee floor((1/2 - P1) / (2 P2)) - 1 for a DNA (n, D)-code, from
/// random selection of reverse-complement pairs.  mode exact computes P1 and
/// P2 by enumeration (refused above the cap); mode analytic_bound substitutes
/// the counting bounds, which only lowers the guarantee.  When 1/2 - P1 <= 0
/// the bound is vacuous and reported as 0.
BoundReport random_coding_size_bound(int q, int n, int distance, SimilarityKind kind,
                                     BoundMode mode,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// The root v in (0, min(d, 1-d)) of ((1-d)/v - 1) * (d/v - 1)^2 = 1,
/// computed by the fixed-point iteration w <- 1 + 1/sqrt(((1-d)/d) w - 1),
/// v = d / lim w.  Defined on 0 < d < 1/2; verified to residual 1e-9.
double v_of_d(double d);

/// Exponent E_q(d) = (1-d) h_q(v/(1-d)) + 2d h_q(v/d) with v = v_of_d(d),
/// governing the block-similarity rate bound.
double block_exponent(int q, double d);

/// Asymptotic rate lower bounds at relative distance d = D/n:
///   additive  1 - h_q(d) - d log_q(q-1)            (Gilbert-Varshamov)
///   deletion  1 + d - 2 (d log_q(q-1) + h_q(d))
///   block     (1 - d) - E_q(d)
/// Domains: (0, (q-1)/q] for additive and deletion, (0, 1/2) for block.
BoundReport rate_lower(int q, double d, SimilarityKind kind);

/// Largest d where rate_lower stays positive, by bisection to 1e-10.
CriticalPoint critical_fraction(int q, SimilarityKind kind);

/// Finite-n leading-order size guarantees:
///   deletion  (D!)^2 / 4 * (q / (q-1)^2)^D * q^n / n^(2D)
///   block     D! / (4 q^D) * q^n / n^D
BoundReport asymptotic_size_lower(int q, int n, int distance, SimilarityKind kind);

}  // namespace dnacodes
