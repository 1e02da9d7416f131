#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dnacodes/numeric.hpp"
#include "dnacodes/sequence.hpp"
#include "dnacodes/similarity.hpp"

namespace dnacodes {

/// A candidate DNA code.  Validity under the two-part definition is checked
/// by validate_dna_code, not by this struct.
struct DnaCode {
    int q = 0;
    int n = 0;
    SimilarityKind kind = SimilarityKind::deletion;
    int distance = 1;
    std::vector<QarySequence> codewords;
};

/// A DNA (n, D)-code must satisfy
///   (i)  pairing: no codeword is its own reverse complement, and the reverse
///        complement of every codeword is again a codeword, and
///   (ii) distance: every pair of distinct codewords has similarity at most
///        n - D - 1.
/// Duplicate codewords are reported as their own violation class.
enum class ViolationKind { duplicate, self_reverse_complement, missing_partner, distance };

struct Violation {
    ViolationKind kind = ViolationKind::duplicate;
    QarySequence a;
    /// For missing_partner: the absent reverse complement.  For distance: the
    /// second codeword of the offending pair.
    std::optional<QarySequence> b;
    int similarity = -1;  // distance violations only
};

struct ValidationReport {
    bool valid = false;
    /// Every violation found, sorted by (kind, a, b).  With fail_fast set,
    /// at most one.
    std::vector<Violation> violations;
    /// Largest similarity seen over distinct codeword pairs; -1 when fewer
    /// than two distinct codewords (or when fail_fast stopped early).
    int max_observed_similarity = -1;
};

struct ValidateOptions {
    bool fail_fast = false;
};

/// Both parts of the definition: pairing and distance.
ValidationReport validate_dna_code(std::span<const QarySequence> codewords, SimilarityKind kind,
                                   int distance, ValidateOptions options = {});

/// Distance part only; reverse-complement structure is not required.
ValidationReport validate_distance_only(std::span<const QarySequence> codewords,
                                        SimilarityKind kind, int distance,
                                        ValidateOptions options = {});

/// Upper bound (q^(n-1) + q) / 2 on the size of any block DNA (n, 1)-code.
BigInt block_dna_size_upper_bound(int q, int n);

/// Sphere-packing bound on additive codes, which also caps DNA codes of the
/// same distance: q^(n-1) for D = 1, else q^n / sum_{i<=D/2} C(n,i)(q-1)^i.
BigInt hamming_upper_bound(int q, int n, int distance);

/// First-order estimate D! / (q-1)^D * q^n / n^D for deletion codes.  No
/// vanishing-term correction, so treat it as an asymptotic estimate rather
/// than a bound that holds at finite n.
double asymptotic_deletion_upper(int q, int n, int distance);

}  // namespace dnacodes
