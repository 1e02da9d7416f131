#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

namespace dnacodes {

/// Dense undirected graph over vertices 0..size-1, one bit per edge.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }
    std::size_t degree(std::size_t u) const;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

struct CliqueSearchResult {
    std::vector<int> clique;  // sorted vertex indices
    /// True when the search space was exhausted, certifying the clique as
    /// maximum.  False when the time budget ran out first; the clique is then
    /// only a lower bound.
    bool completed = true;
};

/// Deterministic single-threaded branch and bound: vertices are explored in
/// degeneracy order and pruned with greedy-coloring upper bounds.  Ties break
/// by vertex index, so equal inputs give equal outputs regardless of timing.
CliqueSearchResult max_clique(const AdjacencyMatrix& graph,
                              std::chrono::duration<double> budget);

}  // namespace dnacodes
