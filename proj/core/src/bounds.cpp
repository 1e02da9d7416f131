#include "dnacodes/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "dnacodes/errors.hpp"
#include "dnacodes/search.hpp"

namespace dnacodes {

namespace {

void check_even_alphabet(int q) {
    if (q < 2 || q > 256 || q % 2 != 0)
        throw std::invalid_argument("alphabet size must be even and in [2, 256], got " +
                                    std::to_string(q));
}

double log_q(int q, double x) { return std::log(x) / std::log(double(q)); }

// Ways to distribute M letters into N labelled runs, every run non-empty:
// stars and bars with a letter per run up front.
BigInt runs_all_nonempty(int m, int n) {
    return binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(n - 1));
}

// Ways to distribute M letters into N labelled runs, empty runs allowed.
BigInt runs_maybe_empty(int m, int n) {
    return binomial(static_cast<unsigned>(m + n - 1), static_cast<unsigned>(n - 1));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

template <typename F>
double bisect(F&& f, double lo, double hi, double tol, const char* what) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw numerical_failure(std::string(what) + ": no sign change on [" +
                                format_double(lo) + ", " + format_double(hi) + "]");
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0) return mid;
        if ((fmid > 0) == (flo > 0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(BoundMode mode) {
    switch (mode) {
        case BoundMode::exact: return "exact";
        case BoundMode::analytic_bound: return "analytic-bound";
        case BoundMode::asymptotic: return "asymptotic";
    }
    return "?";
}

double entropy(int q, double u) {
    if (q < 2) throw std::invalid_argument("entropy base must be at least 2");
    if (!(u >= 0.0 && u <= 1.0))
        throw std::invalid_argument("entropy argument must lie in [0, 1], got " +
                                    format_double(u));
    if (u == 0.0 || u == 1.0) return 0.0;
    return (-u * std::log(u) - (1.0 - u) * std::log(1.0 - u)) / std::log(double(q));
}

BigInt insertion_count(int q, int n, int s) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (s < 0 || s > n)
        throw std::invalid_argument("need 0 <= s <= n for supersequence counts");
    BigInt total = 0;
    for (int k = 0; k <= n - s; ++k)
        total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) *
                 ipow(q - 1, static_cast<unsigned>(k));
    return total;
}

BigInt bmax(int n, int s) {
    if (s < 1 || s > n) throw std::invalid_argument("need 1 <= s <= n");
    BigInt best = 0;
    const int j_top = std::min(s, n - s + 1);
    for (int j = 1; j <= j_top; ++j) {
        const BigInt c = binomial(static_cast<unsigned>(n - s + 1), static_cast<unsigned>(j));
        const BigInt term =
            binomial(static_cast<unsigned>(s - 1), static_cast<unsigned>(j - 1)) * c * c;
        if (term > best) best = term;
    }
    return best;
}

CountingBounds counting_bounds(int q, int n, int s, SimilarityKind kind) {
    check_even_alphabet(q);
    if (s < 1 || s > n) throw std::invalid_argument("need 1 <= s <= n");

    CountingBounds out{0, 0};
    switch (kind) {
        case SimilarityKind::deletion: {
            const BigInt supers = insertion_count(q, n, s);
            out.pair_bound = ipow(q, static_cast<unsigned>(s)) * supers * supers;
            out.selfrc_bound =
                s % 2 == 0 ? ipow(q, static_cast<unsigned>(s / 2)) * supers : BigInt(0);
            break;
        }
        case SimilarityKind::block: {
            // a shared part of length s splits into j blocks; each side then
            // distributes its n-s free letters around those blocks
            const int j_top = std::min(s, n - s + 1);
            const BigInt q_free = ipow(q, static_cast<unsigned>(n - s));
            BigInt pair = 0, self = 0;
            for (int j = 1; j <= j_top; ++j) {
                const BigInt splits = runs_all_nonempty(s, j);
                // j blocks leave j+1 gaps; interior gaps need a letter to
                // keep the blocks separated, which consumes j-1 of the n-s
                const BigInt fills = runs_maybe_empty((n - s) - (j - 1), j + 1);
                pair += splits * (q_free * fills) * (q_free * fills);
                if (s % 2 == 0) {
                    const BigInt half_splits =
                        binomial(static_cast<unsigned>(s / 2 - 1),
                                 static_cast<unsigned>((j + 1) / 2 - 1));
                    self += half_splits * q_free * fills;
                }
            }
            out.pair_bound = ipow(q, static_cast<unsigned>(s)) * pair;
            out.selfrc_bound =
                s % 2 == 0 ? ipow(q, static_cast<unsigned>(s / 2)) * self : BigInt(0);
            break;
        }
        case SimilarityKind::additive:
            throw std::invalid_argument(
                "counting bounds are defined for deletion and block similarity");
    }
    return out;
}

BoundReport random_coding_size_bound(int q, int n, int distance, SimilarityKind kind,
                                     BoundMode mode, std::uint64_t cap) {
    check_even_alphabet(q);
    if (distance < 1 || distance > n - 1)
        throw std::invalid_argument("distance must lie in [1, n-1]");
    if (mode == BoundMode::asymptotic)
        throw std::invalid_argument("random-coding mode must be exact or analytic-bound");

    BigRat p1 = 0, p2 = 0;
    if (mode == BoundMode::exact) {
        std::tie(p1, p2) = similarity_tail_probabilities(q, n, distance, kind, cap);
    } else {
        const BigInt qn = ipow(q, static_cast<unsigned>(n));
        for (int t = 0; t <= distance; ++t) {
            const CountingBounds cb = counting_bounds(q, n, n - t, kind);
            p1 += BigRat(cb.selfrc_bound, qn);
            p2 += BigRat(cb.pair_bound, qn * qn);
        }
    }

    BoundReport report;
    report.name = "random-coding-size-lower";
    report.mode = mode;
    report.params = {{"q", std::to_string(q)},
                     {"n", std::to_string(n)},
                     {"distance", std::to_string(distance)},
                     {"kind", std::string(to_string(kind))}};

    const BigRat margin = BigRat(1, 2) - p1;
    if (margin <= 0) {
        report.vacuous = true;
        report.exact = BigRat(0);
        report.value = 0.0;
        return report;
    }
    BigInt guaranteed = bigrat_floor(margin / (2 * p2)) - 1;
    if (guaranteed < 0) guaranteed = 0;
    report.exact = BigRat(guaranteed);
    report.value = to_double(*report.exact);
    return report;
}

double v_of_d(double d) {
    if (!(d > 0.0 && d < 0.5))
        throw std::invalid_argument("v_of_d is defined on 0 < d < 1/2, got " +
                                    format_double(d));
    const double ratio = (1.0 - d) / d;
    double w = 2.0;
    bool converged = false;
    for (int iter = 0; iter < 100000; ++iter) {
        const double arg = ratio * w - 1.0;
        if (arg <= 0.0)
            throw numerical_failure("v_of_d iteration left its domain at w=" +
                                    format_double(w));
        const double next = 1.0 + 1.0 / std::sqrt(arg);
        const double delta = std::abs(next - w);
        w = next;
        if (delta < 1e-12) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw numerical_failure("v_of_d fixed point did not converge at d=" +
                                format_double(d));
    const double v = d / w;
    const double residual =
        std::abs(((1.0 - d) / v - 1.0) * ((d / v - 1.0) * (d / v - 1.0)) - 1.0);
    if (residual >= 1e-9)
        throw numerical_failure("v_of_d residual " + format_double(residual) +
                                " above 1e-9 at d=" + format_double(d));
    return v;
}

double block_exponent(int q, double d) {
    const double v = v_of_d(d);
    return (1.0 - d) * entropy(q, v / (1.0 - d)) + 2.0 * d * entropy(q, v / d);
}

BoundReport rate_lower(int q, double d, SimilarityKind kind) {
    check_even_alphabet(q);
    const double additive_limit = double(q - 1) / double(q);

    double value = 0.0;
    switch (kind) {
        case SimilarityKind::additive:
            if (!(d > 0.0 && d <= additive_limit))
                throw std::invalid_argument("additive rate bound needs 0 < d <= (q-1)/q");
            value = 1.0 - entropy(q, d) - d * log_q(q, double(q - 1));
            break;
        case SimilarityKind::deletion:
            if (!(d > 0.0 && d <= additive_limit))
                throw std::invalid_argument("deletion rate bound needs 0 < d <= (q-1)/q");
            value = 1.0 + d - 2.0 * (d * log_q(q, double(q - 1)) + entropy(q, d));
            break;
        case SimilarityKind::block:
            if (!(d > 0.0 && d < 0.5))
                throw std::invalid_argument("block rate bound needs 0 < d < 1/2");
            value = (1.0 - d) - block_exponent(q, d);
            break;
    }

    BoundReport report;
    report.name = "rate-lower-" + std::string(to_string(kind));
    report.mode = BoundMode::analytic_bound;
    report.value = value;
    report.params = {{"q", std::to_string(q)},
                     {"d", format_double(d)},
                     {"kind", std::string(to_string(kind))}};
    return report;
}

CriticalPoint critical_fraction(int q, SimilarityKind kind) {
    check_even_alphabet(q);
    CriticalPoint point;
    point.q = q;
    point.kind = kind;

    switch (kind) {
        case SimilarityKind::deletion: {
            const auto f = [&](double d) {
                return 1.0 + d - 2.0 * (d * log_q(q, double(q - 1)) + entropy(q, d));
            };
            // f(1e-12) is essentially 1, f((q-1)/q) = -1/q, so a root exists
            const double hi = double(q - 1) / double(q);
            point.d_star = bisect(f, 1e-12, hi, 1e-10, "deletion critical fraction");
            point.residual = std::abs(f(point.d_star));
            break;
        }
        case SimilarityKind::block: {
            const auto f = [&](double d) { return (1.0 - d) - block_exponent(q, d); };
            const double hi = 0.5 - 1e-9;
            if (f(hi) > 0.0) {
                // positive all the way to the edge of the domain: the root
                // saturates at 1/2, where v -> 1/4 by continuity
                point.boundary = true;
                point.d_star = 0.5;
                const double edge = 0.5 - 1.5 * entropy(q, 0.5);
                point.residual = std::abs(edge);
            } else {
                point.d_star = bisect(f, 1e-12, hi, 1e-10, "block critical fraction");
                point.residual = std::abs(f(point.d_star));
            }
            break;
        }
        case SimilarityKind::additive:
            throw std::invalid_argument(
                "critical fractions are reported for deletion and block similarity");
    }
    return point;
}

BoundReport asymptotic_size_lower(int q, int n, int distance, SimilarityKind kind) {
    check_even_alphabet(q);
    if (distance < 1 || distance > n - 1)
        throw std::invalid_argument("distance must lie in [1, n-1]");
    double factorial = 1.0;
    for (int i = 2; i <= distance; ++i) factorial *= i;

    double value = 0.0;
    switch (kind) {
        case SimilarityKind::deletion:
            value = 0.25 * factorial * factorial *
                    std::pow(double(q) / (double(q - 1) * double(q - 1)), distance) *
                    std::pow(double(q), n) / std::pow(double(n), 2 * distance);
            break;
        case SimilarityKind::block:
            value = 0.25 * factorial / std::pow(double(q), distance) *
                    std::pow(double(q), n) / std::pow(double(n), distance);
            break;
        case SimilarityKind::additive:
            throw std::invalid_argument(
                "asymptotic size guarantees cover deletion and block similarity");
    }

    BoundReport report;
    report.name = "asymptotic-size-lower-" + std::string(to_string(kind));
    report.mode = BoundMode::asymptotic;
    report.value = value;
    report.params = {{"q", std::to_string(q)},
                     {"n", std::to_string(n)},
                     {"distance", std::to_string(distance)},
                     {"kind", std::string(to_string(kind))}};
    return report;
}

}  // namespace dnacodes
