#include "dnacodes/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "dnacodes/clique.hpp"
#include "dnacodes/errors.hpp"

namespace dnacodes {

namespace {

void check_params(int q, int n) {
    if (q < 2 || q > 256 || q % 2 != 0)
        throw std::invalid_argument("alphabet size must be even and in [2, 256], got " +
                                    std::to_string(q));
    if (n < 1) throw std::invalid_argument("length must be at least 1");
}

void check_state_cap(const BigInt& states, std::uint64_t cap, const std::string& what) {
    if (states > cap)
        throw enumeration_refused(what + " needs " + states.str() +
                                  " states, above the cap of " + std::to_string(cap) +
                                  "; raise the cap to allow this");
}

std::vector<std::vector<Letter>> materialize(int q, int n) {
    std::vector<std::vector<Letter>> all;
    for_each_sequence(q, n, [&](std::span<const Letter> buf) {
        all.emplace_back(buf.begin(), buf.end());
    });
    return all;
}

}  // namespace

std::string_view to_string(SearchMode mode) {
    return mode == SearchMode::dna ? "dna" : "distance-only";
}

SearchMode search_mode_from_string(std::string_view name) {
    if (name == "dna") return SearchMode::dna;
    if (name == "distance-only") return SearchMode::distance_only;
    throw std::invalid_argument("unknown search mode '" + std::string(name) +
                                "' (expected dna or distance-only)");
}

DistributionTable enumerate_distribution(int q, int n, SimilarityKind kind, std::uint64_t cap) {
    check_params(q, n);
    check_state_cap(ipow(q, static_cast<unsigned>(2 * n)), cap,
                    "enumerating all pairs of length-" + std::to_string(n) + " words over " +
                        std::to_string(q) + " letters");

    DistributionTable table;
    table.q = q;
    table.n = n;
    table.kind = kind;
    table.pair_counts.assign(static_cast<std::size_t>(n) + 1, 0);
    table.selfrc_counts.assign(static_cast<std::size_t>(n) + 1, 0);

    const auto all = materialize(q, n);
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            const int s = similarity_raw(kind, all[i], all[j]);
            table.pair_counts[static_cast<std::size_t>(s)] += i == j ? 1 : 2;
        }
    }
    std::vector<Letter> rc;
    for (const auto& x : all) {
        reverse_complement_into(q, x, rc);
        const int s = similarity_raw(kind, x, rc);
        ++table.selfrc_counts[static_cast<std::size_t>(s)];
    }
    return table;
}

std::pair<BigRat, BigRat> similarity_tail_probabilities(int q, int n, int distance,
                                                        SimilarityKind kind, std::uint64_t cap) {
    check_params(q, n);
    if (distance < 0 || distance > n)
        throw std::invalid_argument("distance must lie in [0, n] for tail probabilities");
    const DistributionTable table = enumerate_distribution(q, n, kind, cap);

    const BigInt qn = ipow(q, static_cast<unsigned>(n));
    BigInt self_tail = 0, pair_tail = 0;
    for (int t = 0; t <= distance; ++t) {
        self_tail += table.selfrc_counts[static_cast<std::size_t>(n - t)];
        pair_tail += table.pair_counts[static_cast<std::size_t>(n - t)];
    }
    return {BigRat(self_tail, qn), BigRat(pair_tail, qn * qn)};
}

SearchResult max_code(int q, int n, int distance, SimilarityKind kind, SearchMode mode,
                      std::chrono::duration<double> budget, std::uint64_t cap) {
    check_params(q, n);
    if (distance < 1 || distance > n - 1)
        throw std::invalid_argument("distance must lie in [1, n-1], got " +
                                    std::to_string(distance));
    if (budget.count() <= 0) throw std::invalid_argument("time budget must be positive");
    check_state_cap(ipow(q, static_cast<unsigned>(n)), cap,
                    "searching all length-" + std::to_string(n) + " words over " +
                        std::to_string(q) + " letters");

    const auto start = std::chrono::steady_clock::now();
    const int threshold = n - distance - 1;
    const auto all = materialize(q, n);

    // vertex set
    std::vector<std::vector<Letter>> first, second;  // second used in dna mode only
    std::vector<Letter> rc;
    if (mode == SearchMode::dna) {
        for (const auto& x : all) {
            reverse_complement_into(q, x, rc);
            if (rc == x) continue;                // self-reverse-complementary
            if (std::lexicographical_compare(rc.begin(), rc.end(), x.begin(), x.end()))
                continue;                         // pair already seen from the other side
            if (similarity_raw(kind, x, rc) > threshold) continue;
            first.push_back(x);
            second.push_back(rc);
        }
    } else {
        first = all;
    }

    const std::size_t v = first.size();
    // a dense adjacency over v vertices costs v^2/8 bytes
    if (v > 65536)
        throw enumeration_refused("the compatibility graph would have " + std::to_string(v) +
                                  " vertices; refusing above 65536");

    AdjacencyMatrix graph(v);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            bool compatible = similarity_raw(kind, first[i], first[j]) <= threshold;
            if (compatible && mode == SearchMode::dna)
                compatible = similarity_raw(kind, first[i], second[j]) <= threshold &&
                             similarity_raw(kind, second[i], first[j]) <= threshold &&
                             similarity_raw(kind, second[i], second[j]) <= threshold;
            if (compatible) graph.add_edge(i, j);
        }
    }

    const auto spent = std::chrono::steady_clock::now() - start;
    const CliqueSearchResult clique = max_clique(graph, budget - spent);

    SearchResult result;
    result.mode = mode;
    result.optimal = clique.completed;
    for (int idx : clique.clique) {
        result.code.emplace_back(q, first[static_cast<std::size_t>(idx)]);
        if (mode == SearchMode::dna)
            result.code.emplace_back(q, second[static_cast<std::size_t>(idx)]);
    }
    std::sort(result.code.begin(), result.code.end());
    result.size = result.code.size();
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

}  // namespace dnacodes
