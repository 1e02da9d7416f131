#include "dnacodes/clique.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnacodes {

AdjacencyMatrix::AdjacencyMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

void AdjacencyMatrix::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t AdjacencyMatrix::degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n_; ++v)
        if (adjacent(u, v)) ++d;
    return d;
}

namespace {

using Clock = std::chrono::steady_clock;

// Smallest-last (degeneracy) ordering, reversed so that high-core vertices
// come first.  Ties go to the lower index, which keeps the whole search
// deterministic.
std::vector<int> root_order(const AdjacencyMatrix& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);

    std::vector<int> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        removal.push_back(static_cast<int>(best));
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && g.adjacent(best, v)) --deg[v];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

struct Searcher {
    const AdjacencyMatrix& g;
    Clock::time_point deadline;
    bool completed = true;
    std::vector<int> best;
    std::vector<int> current;

    // Candidates arrive ordered; greedy coloring over that order yields, for
    // each candidate, an upper bound on any clique through it and earlier
    // candidates.  Processing in reverse lets one bound prune the whole tail.
    void expand(const std::vector<int>& candidates) {
        if (Clock::now() >= deadline) {
            completed = false;
            return;
        }
        if (candidates.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }

        std::vector<std::vector<int>> classes;
        for (int v : candidates) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool independent = true;
                for (int u : classes[c])
                    if (g.adjacent(static_cast<std::size_t>(u), static_cast<std::size_t>(v))) {
                        independent = false;
                        break;
                    }
                if (independent) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }

        std::vector<std::pair<int, int>> ordered;  // (vertex, color bound)
        ordered.reserve(candidates.size());
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) ordered.emplace_back(v, static_cast<int>(c) + 1);

        for (std::size_t i = ordered.size(); i-- > 0;) {
            const auto [v, bound] = ordered[i];
            if (current.size() + static_cast<std::size_t>(bound) <= best.size()) return;
            std::vector<int> next;
            for (std::size_t t = 0; t < i; ++t)
                if (g.adjacent(static_cast<std::size_t>(ordered[t].first),
                               static_cast<std::size_t>(v)))
                    next.push_back(ordered[t].first);
            current.push_back(v);
            expand(next);
            current.pop_back();
            if (!completed) return;
        }
    }
};

}  // namespace

CliqueSearchResult max_clique(const AdjacencyMatrix& graph, std::chrono::duration<double> budget) {
    Searcher s{graph,
               Clock::now() + std::chrono::duration_cast<Clock::duration>(budget),
               true,
               {},
               {}};
    if (graph.size() > 0) s.expand(root_order(graph));
    std::sort(s.best.begin(), s.best.end());
    return CliqueSearchResult{std::move(s.best), s.completed};
}

}  // namespace dnacodes
