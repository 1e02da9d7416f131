#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacodes/constructions.hpp"
#include "dnacodes/numeric.hpp"
#include "dnacodes/sequence.hpp"
#include "dnacodes/similarity.hpp"

namespace dnacodes {

/// Exact similarity statistics over the full space A^n: pair_counts[s] is the
/// number of ordered pairs (x, y) with similarity s, and selfrc_counts[s]
/// counts the words x whose similarity to their own reverse complement is s.
struct DistributionTable {
    int q = 0;
    int n = 0;
    SimilarityKind kind = SimilarityKind::deletion;
    std::vector<std::uint64_t> pair_counts;    // index 0..n, sums to q^(2n)
    std::vector<std::uint64_t> selfrc_counts;  // index 0..n, sums to q^n
};

DistributionTable enumerate_distribution(int q, int n, SimilarityKind kind,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Exact tail probabilities used by the random-coding bound:
///   first   P1 = Pr[ S(x, rc(x)) >= n - D ]          (x uniform)
///   second  P2 = Pr[ S(x, y) >= n - D ]              (x, y independent uniform)
std::pair<BigRat, BigRat> similarity_tail_probabilities(
    int q, int n, int distance, SimilarityKind kind,
    std::uint64_t cap = kDefaultEnumerationCap);

enum class SearchMode { dna, distance_only };

std::string_view to_string(SearchMode mode);
SearchMode search_mode_from_string(std::string_view name);

struct SearchResult {
    std::vector<QarySequence> code;  // sorted
    std::size_t size = 0;
    /// Whether the branch and bound ran to completion, certifying optimality.
    bool optimal = false;
    std::chrono::duration<double> elapsed{0};
    SearchMode mode = SearchMode::dna;
};

/// Largest code for the given parameters, by exhaustive branch and bound.
///
/// In dna mode the vertices are reverse-complement pairs {x, rc(x)} with all
/// four cross-similarities within bound (self-reverse-complementary words can
/// never appear), and the result size counts both members of each chosen
/// pair.  In distance_only mode the vertices are single words.  Exceeding the
/// time budget degrades the result to a lower bound with optimal = false.
SearchResult max_code(int q, int n, int distance, SimilarityKind kind, SearchMode mode,
                      std::chrono::duration<double> budget = std::chrono::minutes(10),
                      std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace dnacodes
