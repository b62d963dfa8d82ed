#include "indseq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace indseq {

Graph Graph::from_edges(Count n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("repeated edge rejected");
    }
    g.m_ = static_cast<Count>(edges.size());
    return g;
}

Graph Graph::from_adjacency_unchecked(std::vector<std::vector<int>> adjacency) {
    Graph g;
    g.adjacency_ = std::move(adjacency);
    Count degSum = 0;
    for (auto& nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        degSum += static_cast<Count>(nbrs.size());
    }
    g.m_ = degSum / 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v)
        out[v] = static_cast<int>(adjacency_[v].size());
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (int v : adjacency_[u])
            if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSubset& s) {
    const auto& ids = s.indices();  // 1-based, sorted
    std::vector<int> newLabel(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const int v = ids[i] - 1;
        if (v < 0 || v >= g.n()) throw std::out_of_range("subset index out of graph range");
        newLabel[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<std::vector<int>> adj(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const int v = ids[i] - 1;
        for (int w : g.neighbors(v)) {
            const int lw = newLabel[static_cast<std::size_t>(w)];
            if (lw >= 0) adj[i].push_back(lw);
        }
    }
    return Graph::from_adjacency_unchecked(std::move(adj));
}

DegreeSequence degree_sequence_of(const Graph& g) {
    return DegreeSequence::from_entries_permissive(g.degrees());
}

namespace {

ComponentSummary summarize(std::vector<Count> sizes, const Graph& g) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    ComponentSummary out;
    out.componentSizes = std::move(sizes);
    out.largest = out.componentSizes.empty() ? 0 : out.componentSizes.front();
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) ++out.nonIsolated;
    return out;
}

}  // namespace

ComponentSummary components(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> parent(n);
    std::vector<Count> size(n, 1);
    std::iota(parent.begin(), parent.end(), 0);

    auto find = [&](int v) {
        int root = v;
        while (parent[static_cast<std::size_t>(root)] != root)
            root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(v)] != root) {
            const int next = parent[static_cast<std::size_t>(v)];
            parent[static_cast<std::size_t>(v)] = root;
            v = next;
        }
        return root;
    };

    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            int ru = find(u);
            int rv = find(v);
            if (ru == rv) continue;
            if (size[static_cast<std::size_t>(ru)] < size[static_cast<std::size_t>(rv)])
                std::swap(ru, rv);
            parent[static_cast<std::size_t>(rv)] = ru;
            size[static_cast<std::size_t>(ru)] += size[static_cast<std::size_t>(rv)];
        }
    }

    std::vector<Count> sizes;
    for (int v = 0; v < g.n(); ++v)
        if (find(v) == v) sizes.push_back(size[static_cast<std::size_t>(v)]);
    return summarize(std::move(sizes), g);
}

ComponentSummary components_bfs(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<bool> seen(n, false);
    std::vector<int> queue;
    std::vector<Count> sizes;
    for (int start = 0; start < g.n(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        Count size = 0;
        queue.clear();
        queue.push_back(start);
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            ++size;
            for (int v : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = true;
                    queue.push_back(v);
                }
            }
        }
        sizes.push_back(size);
    }
    return summarize(std::move(sizes), g);
}

Graph read_edge_list(std::istream& in, Count n) {
    std::vector<std::pair<int, int>> edges;
    std::string line;
    Count maxId = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long u = 0, v = 0;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw std::invalid_argument("edge list: line with a single endpoint");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("edge list: trailing token '" + extra + "'");
        if (u < 1 || v < 1) throw std::invalid_argument("edge list: ids are 1-based");
        maxId = std::max({maxId, static_cast<Count>(u), static_cast<Count>(v)});
        edges.emplace_back(static_cast<int>(std::min(u, v) - 1), static_cast<int>(std::max(u, v) - 1));
    }
    if (n == 0) n = maxId;
    return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path, Count n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return read_edge_list(in, n);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << (u + 1) << ' ' << (v + 1) << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    write_edge_list(g, out);
}

}  // namespace indseq
