#include "dnacodes/similarity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dnacodes/errors.hpp"

namespace dnacodes {

std::string_view to_string(SimilarityKind kind) {
    switch (kind) {
        case SimilarityKind::additive: return "additive";
        case SimilarityKind::deletion: return "deletion";
        case SimilarityKind::block: return "block";
    }
    return "?";
}

SimilarityKind similarity_kind_from_string(std::string_view name) {
    if (name == "additive") return SimilarityKind::additive;
    if (name == "deletion") return SimilarityKind::deletion;
    if (name == "block") return SimilarityKind::block;
    throw std::invalid_argument("unknown similarity kind '" + std::string(name) +
                                "' (expected additive, deletion or block)");
}

int hamming_agreements(std::span<const Letter> x, std::span<const Letter> y) {
    int count = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == y[i]) ++count;
    return count;
}

int lcs_length(std::span<const Letter> x, std::span<const Letter> y) {
    const std::size_t n = x.size(), m = y.size();
    thread_local std::vector<int> prev, cur;
    prev.assign(m + 1, 0);
    cur.assign(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (x[i - 1] == y[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// f(i, j) = length of the longest common block subsequence whose final
// matched pair is (x_i, y_j), or 0 when x_i != y_j.  A subsequence extends a
// shorter one either contiguously (previous pair at (i-1, j-1), adjacent on
// both sides) or with a gap on both sides (previous pair at (i', j') with
// i' <= i-2 and j' <= j-2).  The gap case needs the running 2-d prefix
// maximum of f, kept two rows behind.
int block_common_length(std::span<const Letter> x, std::span<const Letter> y) {
    const std::size_t n = x.size(), m = y.size();
    thread_local std::vector<int> f_prev, f_cur, pm_back2, pm_back1, pm_cur;
    f_prev.assign(m + 1, 0);
    f_cur.assign(m + 1, 0);
    pm_back2.assign(m + 1, 0);  // prefix max over rows 1..i-2
    pm_back1.assign(m + 1, 0);  // prefix max over rows 1..i-1
    pm_cur.assign(m + 1, 0);

    int best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            int f = 0;
            if (x[i - 1] == y[j - 1]) {
                f = 1;
                if (i >= 2 && j >= 2 && f_prev[j - 1] > 0)
                    f = std::max(f, f_prev[j - 1] + 1);
                if (i >= 3 && j >= 3 && pm_back2[j - 2] > 0)
                    f = std::max(f, pm_back2[j - 2] + 1);
                best = std::max(best, f);
            }
            f_cur[j] = f;
            pm_cur[j] = std::max({f, pm_back1[j], pm_cur[j - 1]});
        }
        std::swap(f_prev, f_cur);
        std::swap(pm_back2, pm_back1);
        std::swap(pm_back1, pm_cur);
        pm_cur.assign(m + 1, 0);  // rebuilt next row from pm_back1
    }
    return best;
}

int similarity_raw(SimilarityKind kind, std::span<const Letter> x, std::span<const Letter> y) {
    switch (kind) {
        case SimilarityKind::additive: return hamming_agreements(x, y);
        case SimilarityKind::deletion: return lcs_length(x, y);
        case SimilarityKind::block: return block_common_length(x, y);
    }
    return 0;
}

namespace {

void check_pair(const QarySequence& x, const QarySequence& y) {
    if (x.q() != y.q())
        throw std::invalid_argument("similarity needs a common alphabet, got q=" +
                                    std::to_string(x.q()) + " and q=" + std::to_string(y.q()));
    if (x.length() != y.length())
        throw std::invalid_argument("similarity is defined for equal lengths, got " +
                                    std::to_string(x.length()) + " and " +
                                    std::to_string(y.length()));
}

// Is the masked subsequence of x a subsequence of y?  Greedy scan.
bool subsequence_embeds(std::span<const Letter> x, std::uint32_t mask,
                        std::span<const Letter> y) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        while (j < y.size() && y[j] != x[i]) ++j;
        if (j == y.size()) return false;
        ++j;
    }
    return true;
}

// Can the masked subsequence of x be embedded in y so that chosen positions
// adjacent in x map to adjacent positions of y, and positions with a gap in x
// map to positions with a gap in y?  E(k, j) below means: the k-th chosen
// letter can sit at y position j with the rest of the pattern embeddable to
// its right.
bool block_pattern_embeds(std::span<const Letter> x, std::uint32_t mask,
                          std::span<const Letter> y) {
    std::vector<Letter> z;
    std::vector<bool> adjacent;  // adjacent[k]: chosen positions k, k+1 consecutive in x
    int last_pos = -1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        if (!z.empty()) adjacent.push_back(static_cast<int>(i) == last_pos + 1);
        z.push_back(x[i]);
        last_pos = static_cast<int>(i);
    }
    const std::size_t len = z.size(), m = y.size();
    if (len == 0) return true;

    std::vector<char> next(m, 0), cur(m, 0);
    std::vector<char> next_any_from(m + 1, 0);  // OR of next[j..]
    for (std::size_t j = 0; j < m; ++j)
        next[j] = y[j] == z[len - 1];
    for (std::size_t k = len - 1; k-- > 0;) {
        for (std::size_t jj = m; jj-- > 0;)
            next_any_from[jj] = next_any_from[jj + 1] || next[jj];
        for (std::size_t j = 0; j < m; ++j) {
            bool ok = y[j] == z[k];
            if (ok) {
                if (adjacent[k])
                    ok = j + 1 < m && next[j + 1];
                else
                    ok = j + 2 <= m && next_any_from[j + 2];
            }
            cur[j] = ok;
        }
        std::swap(next, cur);
        std::fill(next_any_from.begin(), next_any_from.end(), 0);
    }
    return std::any_of(next.begin(), next.end(), [](char v) { return v != 0; });
}

}  // namespace

int additive_similarity(const QarySequence& x, const QarySequence& y) {
    check_pair(x, y);
    return hamming_agreements(x.span(), y.span());
}

int deletion_similarity(const QarySequence& x, const QarySequence& y) {
    check_pair(x, y);
    return lcs_length(x.span(), y.span());
}

int block_similarity(const QarySequence& x, const QarySequence& y) {
    check_pair(x, y);
    return block_common_length(x.span(), y.span());
}

int similarity(SimilarityKind kind, const QarySequence& x, const QarySequence& y) {
    check_pair(x, y);
    return similarity_raw(kind, x.span(), y.span());
}

int brute_force_similarity(SimilarityKind kind, const QarySequence& x, const QarySequence& y,
                           int oracle_limit) {
    check_pair(x, y);
    const int n = x.length();
    if (n > oracle_limit || n > 25)
        throw enumeration_refused("brute-force similarity enumerates 2^" + std::to_string(n) +
                                  " index subsets; limit is n <= " +
                                  std::to_string(std::min(oracle_limit, 25)));
    const auto xs = x.span();
    const auto ys = y.span();
    int best = 0;
    const std::uint32_t top = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = false;
        switch (kind) {
            case SimilarityKind::additive: {
                ok = true;
                for (int i = 0; i < n && ok; ++i)
                    if (mask >> i & 1u) ok = xs[static_cast<std::size_t>(i)] ==
                                             ys[static_cast<std::size_t>(i)];
                break;
            }
            case SimilarityKind::deletion:
                ok = subsequence_embeds(xs, mask, ys);
                break;
            case SimilarityKind::block:
                ok = block_pattern_embeds(xs, mask, ys);
                break;
        }
        if (ok) best = size;
    }
    return best;
}

}  // namespace dnacodes
