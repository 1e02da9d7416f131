#include "dnacodes/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dnacodes/errors.hpp"
#include "dnacodes/orbit.hpp"

namespace dnacodes {

namespace {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

void check_even_alphabet(int q) {
    if (q < 2 || q > 256 || q % 2 != 0)
        throw std::invalid_argument("alphabet size must be even and in [2, 256], got " +
                                    std::to_string(q));
}

void check_cap(int q, int n, std::uint64_t cap) {
    const BigInt states = ipow(q, static_cast<unsigned>(n));
    if (states > cap)
        throw enumeration_refused("scanning all length-" + std::to_string(n) +
                                  " words over " + std::to_string(q) + " letters needs " +
                                  states.str() + " states, above the cap of " +
                                  std::to_string(cap) +
                                  "; raise the cap to allow this");
}

bool parity_zero(std::span<const Letter> x, int q) {
    long long sum = 0;
    for (Letter a : x) sum += a;
    return sum % q == 0;
}

// Is x lexicographically no larger than every cyclic shift of itself?
bool is_canonical_rotation(std::span<const Letter> x) {
    const std::size_t n = x.size();
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const Letter a = x[i];
            const Letter b = x[(i + s) % n];
            if (b < a) return false;
            if (b > a) break;
        }
    }
    return true;
}

// Lexicographically least self-reverse-complementary member of a G2/G3 orbit.
const QarySequence& least_self_rc_member(const Orbit& orbit) {
    const QarySequence* best = nullptr;
    for (const QarySequence& m : orbit.members)
        if (is_self_reverse_complementary(m) && (best == nullptr || m < *best)) best = &m;
    if (best == nullptr)
        throw std::logic_error("orbit classified as self-reverse-complementary has no such member");
    return *best;
}

}  // namespace

std::string_view to_string(ConstructionCase c) {
    switch (c) {
        case ConstructionCase::odd_k: return "T31-odd-k";
        case ConstructionCase::power_of_two: return "T31-power-of-two";
        case ConstructionCase::even_k: return "T31-even-k";
        case ConstructionCase::symmetrize: return "T32";
    }
    return "?";
}

ConstructionReport construct_orbit_code(int q, int n, std::uint64_t cap) {
    check_even_alphabet(q);
    if (n < 1) throw std::invalid_argument("length must be at least 1");
    if (n % q != 0)
        throw unsupported_parameters("the orbit construction needs q | n, got q=" +
                                     std::to_string(q) + ", n=" + std::to_string(n));
    check_cap(q, n, cap);

    const int k = n / q;
    ConstructionCase which;
    if (k % 2 == 1)
        which = ConstructionCase::odd_k;
    else if (is_power_of_two(static_cast<std::uint64_t>(q)) &&
             is_power_of_two(static_cast<std::uint64_t>(n)))
        which = ConstructionCase::power_of_two;
    else
        which = ConstructionCase::even_k;
    const bool full_orbits_only = which == ConstructionCase::even_k;

    std::vector<QarySequence> code;
    std::size_t odd_orbit_pairs = 0;
    std::size_t skipped_self_rc = 0;

    for_each_sequence(q, n, [&](std::span<const Letter> buf) {
        if (!parity_zero(buf, q) || !is_canonical_rotation(buf)) return;
        const QarySequence rep(q, std::vector<Letter>(buf.begin(), buf.end()));
        const Orbit orbit = orbit_of(rep);
        const std::size_t ell = orbit.size();

        switch (orbit.cls) {
            case OrbitClass::G1:
                if (!full_orbits_only) code.push_back(rep);
                break;
            case OrbitClass::G2:
                break;  // both members are within one shift of a mirror word
            case OrbitClass::G3: {
                if (full_orbits_only && ell != static_cast<std::size_t>(n)) break;
                if (ell % 4 != 0) {
                    // the odd-shift selection needs orbit size 4k; cannot occur
                    // for the supported parameter cases, but checked anyway
                    ++skipped_self_rc;
                    break;
                }
                const QarySequence& anchor = least_self_rc_member(orbit);
                for (std::size_t m = 1; m < ell; m += 2)
                    code.push_back(cyclic_shift(anchor, static_cast<long>(m)));
                break;
            }
            case OrbitClass::G4: {
                if (full_orbits_only && ell != static_cast<std::size_t>(n)) break;
                if (ell < 2) break;  // cannot happen: size-1 orbits are constant
                // each orbit/partner pair is handled once, from its smaller side
                if (!(orbit.canonical() < orbit.partner.front())) break;
                // a maximum independent set of shifts on the ell-cycle:
                // consecutive shifts are one deletion apart, so take every
                // other one
                const std::size_t top = ell % 2 == 0 ? ell - 2 : ell - 3;
                if (ell % 2 != 0) ++odd_orbit_pairs;
                for (std::size_t m = 0; m <= top; m += 2) {
                    code.push_back(orbit.members[m]);
                    code.push_back(reverse_complement(orbit.members[m]));
                }
                break;
            }
        }
    });

    ConstructionReport report;
    const BigInt q_pow = ipow(q, static_cast<unsigned>(n - 1));
    switch (which) {
        case ConstructionCase::odd_k:
            report.claimed_size = BigRat(q_pow + q, 2);
            break;
        case ConstructionCase::power_of_two:
            report.claimed_size = BigRat(q_pow, 2);
            break;
        case ConstructionCase::even_k: {
            const BigInt geom = (ipow(q, static_cast<unsigned>(n / 2 + 1)) - 1) / (q - 1);
            report.claimed_size = BigRat(q_pow - geom, 2);
            break;
        }
        case ConstructionCase::symmetrize:
            break;
    }

    std::sort(code.begin(), code.end());
    report.case_used = which;
    report.achieved_size = code.size();

    const BigRat achieved(static_cast<long>(code.size()));
    if (odd_orbit_pairs > 0)
        report.notes.push_back(std::to_string(odd_orbit_pairs) +
                               " orbit pair(s) of odd size contribute one shift fewer than "
                               "even-size pairs");
    if (boost::multiprecision::denominator(report.claimed_size) != 1)
        report.notes.push_back("nominal size " + report.claimed_size.str() +
                               " is not an integer");
    else if (boost::multiprecision::numerator(report.claimed_size) % 2 != 0)
        report.notes.push_back("nominal size " + report.claimed_size.str() +
                               " is odd, but a DNA code always has even size");
    if (which != ConstructionCase::even_k && achieved != report.claimed_size)
        report.notes.push_back("achieved size " + std::to_string(code.size()) +
                               " differs from the nominal size " + report.claimed_size.str());
    if (which == ConstructionCase::even_k && achieved < report.claimed_size)
        report.notes.push_back("achieved size " + std::to_string(code.size()) +
                               " fell below the guaranteed " + report.claimed_size.str());
    if (skipped_self_rc > 0)
        report.notes.push_back(std::to_string(skipped_self_rc) +
                               " self-reverse-complementary orbit(s) had size not divisible "
                               "by 4 and were skipped");

    const ValidationReport vr = validate_dna_code(code, SimilarityKind::block, 1);
    report.validated = vr.valid;
    report.code = DnaCode{q, n, SimilarityKind::block, 1, std::move(code)};
    return report;
}

std::vector<QarySequence> tenengolts_code(int q, int n, int beta, int gamma, std::uint64_t cap) {
    check_even_alphabet(q);
    if (n < 1) throw std::invalid_argument("length must be at least 1");
    if (beta < 0 || beta >= q)
        throw std::invalid_argument("beta must lie in [0, q-1]");
    if (gamma < 0 || gamma >= n)
        throw std::invalid_argument("gamma must lie in [0, n-1]");
    check_cap(q, n, cap);

    const TenengoltsClass wanted{beta, gamma};
    std::vector<QarySequence> code;
    for_each_sequence(q, n, [&](std::span<const Letter> buf) {
        const QarySequence x(q, std::vector<Letter>(buf.begin(), buf.end()));
        if (tenengolts_class(x) == wanted) code.push_back(x);
    });
    return code;
}

TenengoltsBest best_tenengolts_class(int q, int n, std::uint64_t cap) {
    check_even_alphabet(q);
    if (n < 1) throw std::invalid_argument("length must be at least 1");
    check_cap(q, n, cap);

    std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);
    for_each_sequence(q, n, [&](std::span<const Letter> buf) {
        const QarySequence x(q, std::vector<Letter>(buf.begin(), buf.end()));
        const TenengoltsClass tc = tenengolts_class(x);
        if (tc.beta == 0) ++counts[static_cast<std::size_t>(tc.gamma)];
    });
    const std::size_t best_gamma = static_cast<std::size_t>(
        std::max_element(counts.begin(), counts.end()) - counts.begin());

    TenengoltsBest best;
    best.gamma = static_cast<int>(best_gamma);
    best.code = tenengolts_code(q, n, 0, best.gamma, cap);
    return best;
}

ConstructionReport symmetrize_to_dna_code(std::span<const QarySequence> deletion_code) {
    if (deletion_code.empty())
        throw std::invalid_argument("cannot symmetrize an empty code");
    const int q = deletion_code.front().q();
    const int n = deletion_code.front().length();
    for (const QarySequence& w : deletion_code)
        if (w.q() != q || w.length() != n)
            throw std::invalid_argument("codewords must share one alphabet and one length");
    if (n % q != 0 || (n / q) % 2 == 0)
        throw unsupported_parameters(
            "symmetrization needs length n = qk with k odd, got q=" + std::to_string(q) +
            ", n=" + std::to_string(n));
    for (const QarySequence& w : deletion_code)
        if (parity_class(w) != 0)
            throw std::invalid_argument("input codeword " + to_string(w) +
                                        " is outside the zero-parity code");
    {
        const ValidationReport vr =
            validate_distance_only(deletion_code, SimilarityKind::deletion, 1);
        if (!vr.valid)
            throw std::invalid_argument(
                "input is not a single-deletion code: deletion similarity reaches " +
                std::to_string(vr.max_observed_similarity) + " (allowed: " +
                std::to_string(n - 2) + ")");
    }

    // group by letter composition
    std::map<Composition, std::vector<QarySequence>> groups;
    for (const QarySequence& w : deletion_code) groups[composition(w)].push_back(w);

    std::vector<QarySequence> kept;
    for (const auto& [comp, members] : groups) {
        const Composition mirror = comp.reversed();
        if (comp == mirror)
            throw std::logic_error("self-mirrored composition cannot occur when k is odd");
        const auto partner = groups.find(mirror);
        bool keep;
        if (partner == groups.end()) {
            keep = true;
        } else if (members.size() != partner->second.size()) {
            keep = members.size() > partner->second.size();
        } else {
            keep = comp < mirror;  // tie: smaller composition wins
        }
        if (keep)
            kept.insert(kept.end(), members.begin(), members.end());
    }

    std::vector<QarySequence> code;
    code.reserve(kept.size() * 2);
    for (const QarySequence& w : kept) {
        code.push_back(w);
        code.push_back(reverse_complement(w));
    }
    std::sort(code.begin(), code.end());

    ConstructionReport report;
    report.case_used = ConstructionCase::symmetrize;
    report.claimed_size = BigRat(static_cast<long>(deletion_code.size()));
    report.achieved_size = code.size();
    if (code.size() < deletion_code.size())
        report.notes.push_back("symmetrized code is smaller than its input, which should "
                               "not happen");
    const ValidationReport vr = validate_dna_code(code, SimilarityKind::deletion, 1);
    report.validated = vr.valid;
    report.code = DnaCode{q, n, SimilarityKind::deletion, 1, std::move(code)};
    return report;
}

BigRat deletion_dna_size_lower_bound(int q, int n) {
    check_even_alphabet(q);
    if (n % q != 0 || (n / q) % 2 == 0)
        throw unsupported_parameters(
            "the symmetrization guarantee needs length n = qk with k odd, got q=" +
            std::to_string(q) + ", n=" + std::to_string(n));
    return BigRat(ipow(q, static_cast<unsigned>(n - 1)), n);
}

}  // namespace dnacodes
