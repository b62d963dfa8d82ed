#pragma once

// Test-only oracles, deliberately independent of the library implementations
// they check: graph existence/counting by brute force over all edge subsets
// of K_n, and a naive quadratic scan for the threshold statistics.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "indseq/degree_sequence.hpp"

namespace oracle {

using indseq::Count;

/// Calls fn(degreesByVertex, edges) for every graph on n labeled vertices.
/// Practical for n <= 6 routinely, n = 7 sparingly (2^21 subsets).
template <typename Fn>
void for_each_graph_on(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const auto m = static_cast<std::uint32_t>(slots.size());
    std::vector<int> degrees(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::fill(degrees.begin(), degrees.end(), 0);
        edges.clear();
        for (std::uint32_t b = 0; b < m; ++b) {
            if (mask & (1ULL << b)) {
                edges.push_back(slots[b]);
                ++degrees[static_cast<std::size_t>(slots[b].first)];
                ++degrees[static_cast<std::size_t>(slots[b].second)];
            }
        }
        fn(degrees, edges);
    }
}

/// Labeled realization count for an arbitrary (unsorted) degree array.
inline Count brute_count_realizations(const std::vector<int>& degreesByVertex) {
    Count count = 0;
    for_each_graph_on(static_cast<int>(degreesByVertex.size()),
                      [&](const std::vector<int>& degrees, const auto&) {
                          if (degrees == degreesByVertex) ++count;
                      });
    return count;
}

/// All sorted degree sequences realizable on exactly n labeled vertices.
inline std::set<std::vector<int>> brute_realizable_sorted(int n) {
    std::set<std::vector<int>> out;
    for_each_graph_on(n, [&](const std::vector<int>& degrees, const auto&) {
        std::vector<int> sorted = degrees;
        std::sort(sorted.begin(), sorted.end());
        out.insert(std::move(sorted));
    });
    return out;
}

struct NaiveJoos {
    Count jd = 0;
    Count R = 0;
    Count MJ = 0;
};

/// Quadratic-by-construction reference: recomputes each prefix sum from
/// scratch.
inline NaiveJoos naive_joos(const std::vector<int>& sorted) {
    const auto n = static_cast<Count>(sorted.size());
    NaiveJoos out;
    out.jd = n;
    for (Count j = 1; j <= n; ++j) {
        Count sum = 0;
        for (Count i = 1; i <= j; ++i) {
            const Count d = sorted[static_cast<std::size_t>(i - 1)];
            sum += d * (d - 2);
        }
        if (sum > 0) {
            out.jd = j;
            break;
        }
    }
    for (Count i = out.jd; i <= n; ++i) out.R += sorted[static_cast<std::size_t>(i - 1)];
    for (int d : sorted)
        if (d != 2) out.MJ += d;
    return out;
}

}  // namespace oracle
