#include <chrono>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "dnacodes/clique.hpp"
#include "dnacodes/code.hpp"
#include "dnacodes/errors.hpp"
#include "dnacodes/search.hpp"
#include "helpers.hpp"

using namespace dnacodes;
using namespace std::chrono_literals;

namespace {

BigInt sum_counts(const std::vector<std::uint64_t>& counts) {
    BigInt total = 0;
    for (std::uint64_t c : counts) total += c;
    return total;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("similarity distribution, q=2 n=2, block") {
    const DistributionTable t = enumerate_distribution(2, 2, SimilarityKind::block);
    REQUIRE(t.pair_counts.size() == 3);
    CHECK(t.pair_counts[0] == 2);   // (00,11) and (11,00)
    CHECK(t.pair_counts[1] == 10);
    CHECK(t.pair_counts[2] == 4);   // the diagonal
    CHECK(t.selfrc_counts[0] == 2);
    CHECK(t.selfrc_counts[1] == 0);
    CHECK(t.selfrc_counts[2] == 2);  // 01 and 10 are their own reverse complements
}

TEST_CASE("similarity distribution, q=2 n=4, deletion") {
    const DistributionTable t = enumerate_distribution(2, 4, SimilarityKind::deletion);
    CHECK(t.pair_counts[4] == 16);  // full similarity only on the diagonal
    CHECK(t.selfrc_counts[1] == 0);
    CHECK(t.selfrc_counts[3] == 0);
}

TEST_CASE("distribution totals") {
    for (SimilarityKind kind :
         {SimilarityKind::additive, SimilarityKind::deletion, SimilarityKind::block}) {
        for (auto [q, n] : {std::pair{2, 3}, {2, 5}, {4, 2}, {6, 2}}) {
            const DistributionTable t = enumerate_distribution(q, n, kind);
            CHECK(sum_counts(t.pair_counts) == ipow(q, static_cast<unsigned>(2 * n)));
            CHECK(sum_counts(t.selfrc_counts) == ipow(q, static_cast<unsigned>(n)));
        }
    }
}

TEST_CASE("a word never shares an odd-length core with its reverse complement") {
    for (SimilarityKind kind : {SimilarityKind::deletion, SimilarityKind::block}) {
        for (auto [q, n] : {std::pair{2, 5}, {2, 6}, {4, 3}}) {
            const DistributionTable t = enumerate_distribution(q, n, kind);
            for (int s = 1; s <= n; s += 2) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(s);
                CHECK(t.selfrc_counts[static_cast<std::size_t>(s)] == 0);
            }
        }
    }
}

TEST_CASE("distribution refuses above the pair cap") {
    // 2^28 ordered pairs with the default cap of 2^26
    CHECK_THROWS_AS(enumerate_distribution(2, 14, SimilarityKind::deletion),
                    enumeration_refused);
}

TEST_CASE("tail probabilities") {
    SUBCASE("q=2 n=2 block, one deletion") {
        const auto [p1, p2] =
            similarity_tail_probabilities(2, 2, 1, SimilarityKind::block);
        CHECK(p1 == BigRat(1, 2));
        CHECK(p2 == BigRat(14, 16));
    }
    SUBCASE("q=2 n=4 deletion, distance zero") {
        const auto [p1, p2] =
            similarity_tail_probabilities(2, 4, 0, SimilarityKind::deletion);
        CHECK(p2 == BigRat(1, 16));
        CHECK(p1 == BigRat(4, 16));  // exactly the self-mirrored words
    }
    SUBCASE("always probabilities, saturating at distance n") {
        for (SimilarityKind kind : {SimilarityKind::deletion, SimilarityKind::block}) {
            const auto [p1, p2] = similarity_tail_probabilities(2, 3, 3, kind);
            CHECK(p1 == BigRat(1));
            CHECK(p2 == BigRat(1));
        }
        const auto [p1, p2] = similarity_tail_probabilities(4, 3, 1, SimilarityKind::block);
        CHECK(p1 >= 0);
        CHECK(p1 <= 1);
        CHECK(p2 >= 0);
        CHECK(p2 <= 1);
    }
    SUBCASE("distance outside [0, n]") {
        CHECK_THROWS_AS(similarity_tail_probabilities(2, 3, 4, SimilarityKind::block),
                        std::invalid_argument);
        CHECK_THROWS_AS(similarity_tail_probabilities(2, 3, -1, SimilarityKind::block),
                        std::invalid_argument);
    }
}

TEST_CASE("maximum clique on hand-built graphs") {
    SUBCASE("triangle plus a pendant") {
        AdjacencyMatrix g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(2, 3);
        const CliqueSearchResult r = max_clique(g, 10s);
        CHECK(r.completed);
        CHECK(r.clique == std::vector<int>{0, 1, 2});
    }
    SUBCASE("edgeless") {
        AdjacencyMatrix g(5);
        const CliqueSearchResult r = max_clique(g, 10s);
        CHECK(r.completed);
        CHECK(r.clique.size() == 1);
    }
    SUBCASE("complete") {
        AdjacencyMatrix g(6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) g.add_edge(i, j);
        const CliqueSearchResult r = max_clique(g, 10s);
        CHECK(r.completed);
        CHECK(r.clique.size() == 6);
    }
    SUBCASE("five-cycle") {
        AdjacencyMatrix g(5);
        for (std::size_t i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
        const CliqueSearchResult r = max_clique(g, 10s);
        CHECK(r.completed);
        CHECK(r.clique.size() == 2);
    }
    SUBCASE("empty graph") {
        AdjacencyMatrix g(0);
        const CliqueSearchResult r = max_clique(g, 10s);
        CHECK(r.completed);
        CHECK(r.clique.empty());
    }
    SUBCASE("self-loops are rejected at construction") {
        AdjacencyMatrix g(3);
        CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    }
}

TEST_CASE("exhaustive search certifies the q=2 n=4 optimum") {
    const SearchResult r =
        max_code(2, 4, 1, SimilarityKind::deletion, SearchMode::dna, 30s);
    CHECK(r.optimal);
    CHECK(r.size == 4);
    CHECK(r.code.size() == 4);
    CHECK(validate_dna_code(r.code, SimilarityKind::deletion, 1).valid);
    CHECK(r.mode == SearchMode::dna);
    CHECK(r.elapsed.count() > 0);
}

TEST_CASE("pair constraint never beats the plain distance constraint") {
    for (SimilarityKind kind : {SimilarityKind::deletion, SimilarityKind::block}) {
        const SearchResult paired =
            max_code(2, 4, 1, kind, SearchMode::dna, 30s);
        const SearchResult plain =
            max_code(2, 4, 1, kind, SearchMode::distance_only, 30s);
        REQUIRE(paired.optimal);
        REQUIRE(plain.optimal);
        CHECK(paired.size <= plain.size);
        CHECK(validate_distance_only(plain.code, kind, 1).valid);
    }
}

TEST_CASE("search results on a fixture-scale instance") {
    // the length-3 space is tiny; mostly a smoke test for block mode
    const SearchResult r =
        max_code(2, 3, 1, SimilarityKind::block, SearchMode::distance_only, 30s);
    CHECK(r.optimal);
    CHECK(r.size >= 2);
    CHECK(validate_distance_only(r.code, SimilarityKind::block, 1).valid);
}

TEST_CASE("an exhausted budget degrades to a lower bound") {
    const SearchResult r = max_code(4, 4, 1, SimilarityKind::deletion,
                                    SearchMode::distance_only, 1ns);
    CHECK(!r.optimal);
    CHECK(r.size <= 24);
}

TEST_CASE("search parameter checks") {
    CHECK_THROWS_AS(max_code(2, 4, 0, SimilarityKind::deletion, SearchMode::dna, 1s),
                    std::invalid_argument);
    CHECK_THROWS_AS(max_code(2, 4, 4, SimilarityKind::deletion, SearchMode::dna, 1s),
                    std::invalid_argument);
    CHECK_THROWS_AS(max_code(2, 4, 1, SimilarityKind::deletion, SearchMode::dna, 0s),
                    std::invalid_argument);
    CHECK_THROWS_AS(max_code(2, 30, 1, SimilarityKind::deletion, SearchMode::dna, 1s),
                    enumeration_refused);
    // within the state cap but too many vertices for a dense matrix
    CHECK_THROWS_AS(max_code(2, 17, 1, SimilarityKind::deletion,
                             SearchMode::distance_only, 1s),
                    enumeration_refused);
}

TEST_CASE("mode names round-trip") {
    CHECK(to_string(SearchMode::dna) == "dna");
    CHECK(to_string(SearchMode::distance_only) == "distance-only");
    CHECK(search_mode_from_string("dna") == SearchMode::dna);
    CHECK(search_mode_from_string("distance-only") == SearchMode::distance_only);
    CHECK_THROWS_AS(search_mode_from_string("both"), std::invalid_argument);
}

}  // TEST_SUITE
