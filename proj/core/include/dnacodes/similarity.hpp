#pragma once

#include <span>
#include <string_view>

#include "dnacodes/sequence.hpp"

namespace dnacodes {

/// The three similarity functions between words of equal length n.  Each one
/// is symmetric, sits in [0, n], and attains n on identical words.
///
///   additive  number of positions where the words agree
///   deletion  length of a longest common subsequence
///   block     length of a longest common subsequence that preserves
///             adjacency both ways: consecutive letters of the subsequence
///             are consecutive in x exactly when they are consecutive in y
///
/// Block similarity never exceeds deletion similarity: every common block
/// subsequence is a common subsequence.
enum class SimilarityKind { additive, deletion, block };

std::string_view to_string(SimilarityKind kind);
SimilarityKind similarity_kind_from_string(std::string_view name);

int additive_similarity(const QarySequence& x, const QarySequence& y);
int deletion_similarity(const QarySequence& x, const QarySequence& y);
int block_similarity(const QarySequence& x, const QarySequence& y);
int similarity(SimilarityKind kind, const QarySequence& x, const QarySequence& y);

/// Independent reference implementation: enumerates index subsets of x
/// directly and checks embeddability in y, with no shared code with the
/// production kernels.  Exponential in n, so refused above oracle_limit.
inline constexpr int kDefaultOracleLimit = 12;
int brute_force_similarity(SimilarityKind kind, const QarySequence& x, const QarySequence& y,
                           int oracle_limit = kDefaultOracleLimit);

// Unchecked kernels over raw symbol buffers, for enumeration loops that
// manage their own invariants.  Both spans must have equal length.
int hamming_agreements(std::span<const Letter> x, std::span<const Letter> y);
int lcs_length(std::span<const Letter> x, std::span<const Letter> y);
int block_common_length(std::span<const Letter> x, std::span<const Letter> y);
int similarity_raw(SimilarityKind kind, std::span<const Letter> x, std::span<const Letter> y);

}  // namespace dnacodes
