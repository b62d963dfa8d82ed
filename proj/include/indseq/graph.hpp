#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "indseq/degree_sequence.hpp"

namespace indseq {

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
/// Immutable after construction. File formats and VertexSubset use 1-based
/// ids; the conversion happens at those boundaries.
class Graph {
public:
    Graph() = default;
    explicit Graph(Count n) : adjacency_(static_cast<std::size_t>(n)) {}

    /// Validates: endpoints in range, no self-loops, no repeated edges.
    static Graph from_edges(Count n, const std::vector<std::pair<int, int>>& edges);

    /// Trusts the caller to pass simple-graph adjacency; sorts the lists.
    static Graph from_adjacency_unchecked(std::vector<std::vector<int>> adjacency);

    Count n() const { return static_cast<Count>(adjacency_.size()); }
    Count m() const { return m_; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;

    std::vector<int> degrees() const;
    /// Canonical edge list: u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adjacency_;
    Count m_ = 0;
};

struct ComponentSummary {
    std::vector<Count> componentSizes;  // non-increasing
    Count largest = 0;
    Count nonIsolated = 0;              // vertices with degree >= 1
};

/// Subgraph induced by S (1-based ids), relabeled 0..|S|-1 in S's sorted order.
Graph induced_subgraph(const Graph& g, const VertexSubset& s);

/// Sorted degrees; permissive (zeros allowed).
DegreeSequence degree_sequence_of(const Graph& g);

/// Union-find with path compression and union by size.
ComponentSummary components(const Graph& g);
/// BFS reference implementation, kept for differential testing.
ComponentSummary components_bfs(const Graph& g);

/// Edge-list file: one "u v" pair per line, 1-based. Output is canonical
/// (u < v, sorted); input tolerates either endpoint order. n = 0 infers the
/// vertex count from the largest id seen.
Graph read_edge_list(std::istream& in, Count n = 0);
Graph read_edge_list_file(const std::string& path, Count n = 0);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace indseq
