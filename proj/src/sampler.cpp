#include "indseq/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace indseq {

const char* to_string(SampleMethod m) {
    switch (m) {
        case SampleMethod::Auto: return "auto";
        case SampleMethod::Rejection: return "rejection";
        case SampleMethod::SwitchChain: return "switch";
    }
    return "?";
}

SampleMethod sample_method_from_string(const std::string& s) {
    if (s == "auto") return SampleMethod::Auto;
    if (s == "rejection") return SampleMethod::Rejection;
    if (s == "switch" || s == "switch_chain") return SampleMethod::SwitchChain;
    throw std::invalid_argument("unknown sampling method: " + s);
}

double expected_rejection_retries(const DegreeSequence& d) {
    const double M = static_cast<double>(d.total_degree());
    if (M <= 0) return 1.0;
    const double lambda = (static_cast<double>(d.total_degree_squared()) / M - 1.0) / 2.0;
    if (lambda <= 0) return 1.0;
    return std::exp(lambda + lambda * lambda);
}

namespace {

Graph sample_rejection(const DegreeSequence& d, Rng& rng, Count maxRejections,
                       Count& rejections) {
    const auto n = d.n();
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(d.total_degree()));
    for (Count i = 0; i < n; ++i) {
        const int deg = d.entries()[static_cast<std::size_t>(i)];
        for (int k = 0; k < deg; ++k) stubs.push_back(static_cast<int>(i));
    }
    if (stubs.size() % 2 != 0)
        throw std::invalid_argument("rejection sampler: odd total degree");

    std::vector<std::pair<int, int>> edges(stubs.size() / 2);
    rejections = 0;
    for (Count attempt = 0; attempt < maxRejections; ++attempt) {
        // Fisher-Yates with the shared RNG, then pair consecutive stubs.
        for (std::size_t i = stubs.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(rng.below(i));
            std::swap(stubs[i - 1], stubs[j]);
        }
        bool simple = true;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const int u = stubs[2 * i];
            const int v = stubs[2 * i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            edges[i] = {std::min(u, v), std::max(u, v)};
        }
        if (simple) {
            std::sort(edges.begin(), edges.end());
            simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
        }
        if (simple) {
            std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
            for (auto [u, v] : edges) {
                adj[static_cast<std::size_t>(u)].push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(u);
            }
            return Graph::from_adjacency_unchecked(std::move(adj));
        }
        ++rejections;
    }
    std::ostringstream msg;
    msg << "rejection sampler: budget of " << maxRejections
        << " pairings exhausted; the maximum degree is too large for the pairing model -- "
           "use the switch chain";
    throw SamplerError(msg.str());
}

struct edge_hash {
    std::size_t operator()(const std::pair<int, int>& e) const {
        return std::hash<std::uint64_t>()((static_cast<std::uint64_t>(e.first) << 32) ^
                                          static_cast<std::uint32_t>(e.second));
    }
};

Graph sample_switch_chain(const DegreeSequence& d, Rng& rng, Count steps, Count& accepted) {
    Graph start = havel_hakimi_graph(d);
    std::vector<std::pair<int, int>> edges = start.edges();
    const auto m = static_cast<std::uint64_t>(edges.size());
    std::unordered_set<std::pair<int, int>, edge_hash> present(edges.begin(), edges.end());
    present.reserve(edges.size() * 2);

    auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

    accepted = 0;
    if (m >= 2) {
        for (Count step = 0; step < steps; ++step) {
            const auto i = static_cast<std::size_t>(rng.below(m));
            const auto j = static_cast<std::size_t>(rng.below(m));
            if (i == j) continue;
            auto [a, b] = edges[i];
            auto [c, e] = edges[j];
            if (rng.coin()) std::swap(a, b);
            if (rng.coin()) std::swap(c, e);
            // propose (a,c) and (b,e); lazy chain, invalid proposals are skipped
            if (a == c || a == e || b == c || b == e) continue;
            if (present.count(key(a, c)) || present.count(key(b, e))) continue;
            present.erase(key(a, b));
            present.erase(key(c, e));
            present.insert(key(a, c));
            present.insert(key(b, e));
            edges[i] = key(a, c);
            edges[j] = key(b, e);
            ++accepted;
            assert(present.size() == edges.size());  // degrees are preserved by the swap
        }
    }

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(d.n()));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return Graph::from_adjacency_unchecked(std::move(adj));
}

}  // namespace

Graph havel_hakimi_graph(const DegreeSequence& d) {
    if (!is_graphical(d)) throw std::invalid_argument("havel_hakimi_graph: sequence not graphical");
    const auto n = d.n();
    std::priority_queue<std::pair<int, int>> heap;  // (residual, vertex)
    for (Count i = 0; i < n; ++i) {
        const int deg = d.entries()[static_cast<std::size_t>(i)];
        if (deg > 0) heap.emplace(deg, static_cast<int>(i));
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> scratch;
    while (!heap.empty()) {
        auto [r, u] = heap.top();
        heap.pop();
        scratch.clear();
        for (int k = 0; k < r; ++k) {
            if (heap.empty())
                throw std::logic_error("havel_hakimi_graph: ran out of partners");
            scratch.push_back(heap.top());
            heap.pop();
        }
        for (auto& [rv, v] : scratch) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
            if (--rv > 0) heap.emplace(rv, v);
        }
    }
    return Graph::from_adjacency_unchecked(std::move(adj));
}

Graph sample_uniform(const DegreeSequence& d, const SamplerConfig& cfg, SampleInfo* info) {
    if (!is_graphical(d)) throw std::invalid_argument("sample_uniform: sequence not graphical");
    if (cfg.maxRejections < 1) throw std::invalid_argument("sample_uniform: maxRejections < 1");

    SampleInfo local;
    SampleInfo& out = info ? *info : local;
    out = SampleInfo{};
    out.seed = cfg.seed;

    SampleMethod method = cfg.method;
    if (method == SampleMethod::Auto) {
        const double M = static_cast<double>(d.total_degree());
        const double m = M / 2.0;
        const double delta2 = static_cast<double>(d.max_degree()) * d.max_degree();
        const double retries = expected_rejection_retries(d);
        // Exact uniformity is worth a constant-factor premium over the
        // approximate chain, but not more: each retry costs O(M), so compare
        // total expected work against the chain length.
        const double chainWork = std::max(1.0, cfg.switchFactor * m * std::log(std::max(m, 2.0)));
        const bool cheap = delta2 <= M / 4.0 &&
                           retries <= static_cast<double>(cfg.maxRejections) / 3.0 &&
                           retries * M <= 4.0 * chainWork;
        method = cheap ? SampleMethod::Rejection : SampleMethod::SwitchChain;
        if (method == SampleMethod::SwitchChain) {
            out.autoFellBack = true;
            std::ostringstream note;
            note << "auto fell back to the switch chain (expected rejection retries ~ " << retries
                 << "); samples are approximately uniform";
            out.note = note.str();
        }
    }
    out.methodUsed = method;

    Rng rng(cfg.seed);
    if (method == SampleMethod::Rejection)
        return sample_rejection(d, rng, cfg.maxRejections, out.rejections);

    const auto m = d.total_degree() / 2;
    Count steps = cfg.switchSteps;
    if (steps < 0) {
        steps = m > 1 ? static_cast<Count>(std::ceil(cfg.switchFactor * static_cast<double>(m) *
                                                     std::log(static_cast<double>(m))))
                      : 0;
    }
    out.switchSteps = steps;
    return sample_switch_chain(d, rng, steps, out.switchAccepted);
}

namespace {

struct Enumerator {
    int n = 0;
    std::vector<int> residual;
    std::vector<char> adj;  // n*n matrix
    std::vector<std::pair<int, int>> edges;
    const std::function<bool(const std::vector<std::pair<int, int>>&)>* visit = nullptr;
    bool stopped = false;

    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u) * n + v] != 0; }
    void set_adj(int u, int v, char val) {
        adj[static_cast<std::size_t>(u) * n + v] = val;
        adj[static_cast<std::size_t>(v) * n + u] = val;
    }

    // Vertices are completed in increasing order; for the current vertex the
    // partners are chosen in increasing order. Each labeled graph is
    // therefore produced exactly once, in a fixed order.
    void rec(int u, int minNext) {
        if (stopped) return;
        while (u < n && residual[static_cast<std::size_t>(u)] == 0) {
            ++u;
            minNext = u + 1;
        }
        if (u == n) {
            if (!(*visit)(edges)) stopped = true;
            return;
        }
        int avail = 0;
        for (int v = minNext; v < n; ++v)
            if (residual[static_cast<std::size_t>(v)] > 0 && !adjacent(u, v)) ++avail;
        if (avail < residual[static_cast<std::size_t>(u)]) return;

        for (int v = minNext; v < n; ++v) {
            if (residual[static_cast<std::size_t>(v)] == 0 || adjacent(u, v)) continue;
            set_adj(u, v, 1);
            --residual[static_cast<std::size_t>(u)];
            --residual[static_cast<std::size_t>(v)];
            edges.emplace_back(u, v);
            if (residual[static_cast<std::size_t>(u)] > 0)
                rec(u, v + 1);
            else
                rec(u + 1, u + 2);
            edges.pop_back();
            ++residual[static_cast<std::size_t>(u)];
            ++residual[static_cast<std::size_t>(v)];
            set_adj(u, v, 0);
            if (stopped) return;
        }
    }
};

}  // namespace

void for_each_realization(
    const std::vector<int>& degreesByVertex,
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit) {
    Count sum = 0;
    for (int deg : degreesByVertex) {
        if (deg < 0) throw std::invalid_argument("for_each_realization: negative degree");
        if (deg >= static_cast<int>(degreesByVertex.size()) && deg > 0) return;  // impossible
        sum += deg;
    }
    if (sum % 2 != 0) return;

    Enumerator en;
    en.n = static_cast<int>(degreesByVertex.size());
    en.residual = degreesByVertex;
    en.adj.assign(static_cast<std::size_t>(en.n) * en.n, 0);
    en.visit = &visit;
    en.rec(0, 1);
}

std::vector<Graph> enumerate_graphs(const DegreeSequence& d, int limit) {
    if (d.n() > limit) {
        std::ostringstream msg;
        msg << "enumerate_graphs: n = " << d.n() << " exceeds limit " << limit;
        throw std::invalid_argument(msg.str());
    }
    std::vector<Graph> out;
    for_each_realization(d.entries(), [&](const std::vector<std::pair<int, int>>& edges) {
        out.push_back(Graph::from_edges(d.n(), edges));
        return true;
    });
    return out;
}

bool realization_exists(const std::vector<int>& degreesByVertex) {
    bool found = false;
    for_each_realization(degreesByVertex, [&](const std::vector<std::pair<int, int>>&) {
        found = true;
        return false;
    });
    return found;
}

Count count_realizations(const std::vector<int>& degreesByVertex) {
    Count count = 0;
    for_each_realization(degreesByVertex, [&](const std::vector<std::pair<int, int>>&) {
        ++count;
        return true;
    });
    return count;
}

Count GraphClassIndex::class_count(const std::vector<int>& key) const {
    auto it = classes.find(key);
    return it == classes.end() ? 0 : it->second;
}

GraphClassIndex class_counts(const DegreeSequence& d, const VertexSubset& S, const ClassQuery& q,
                             int limit) {
    if (d.n() > limit) {
        std::ostringstream msg;
        msg << "class_counts: n = " << d.n() << " exceeds limit " << limit;
        throw std::invalid_argument(msg.str());
    }
    const auto n = static_cast<int>(d.n());
    std::vector<char> inS(static_cast<std::size_t>(n), 0);
    for (int idx : S.indices()) inS[static_cast<std::size_t>(idx - 1)] = 1;

    auto checkVertex = [&](int v1based) {
        if (v1based < 1 || v1based > n) throw std::out_of_range("class_counts: vertex out of range");
    };
    for (int v : q.degreeVertices) checkVertex(v);
    for (auto& [v, i] : q.conditions) {
        checkVertex(v);
        (void)i;
    }
    if (q.edgeFlag) {
        checkVertex(q.edgeFlag->first);
        checkVertex(q.edgeFlag->second);
    }

    GraphClassIndex out;
    std::vector<int> inducedDeg(static_cast<std::size_t>(n));
    for_each_realization(d.entries(), [&](const std::vector<std::pair<int, int>>& edges) {
        ++out.total;
        std::fill(inducedDeg.begin(), inducedDeg.end(), 0);
        bool flagged = false;
        for (auto [u, v] : edges) {
            if (inS[static_cast<std::size_t>(v)]) ++inducedDeg[static_cast<std::size_t>(u)];
            if (inS[static_cast<std::size_t>(u)]) ++inducedDeg[static_cast<std::size_t>(v)];
            if (q.edgeFlag) {
                const int a = q.edgeFlag->first - 1;
                const int b = q.edgeFlag->second - 1;
                if ((u == a && v == b) || (u == b && v == a)) flagged = true;
            }
        }
        for (auto [v, want] : q.conditions)
            if (inducedDeg[static_cast<std::size_t>(v - 1)] != want) return true;
        ++out.matching;
        std::vector<int> key;
        key.reserve(q.degreeVertices.size() + (q.edgeFlag ? 1 : 0));
        for (int v : q.degreeVertices) key.push_back(inducedDeg[static_cast<std::size_t>(v - 1)]);
        if (q.edgeFlag) key.push_back(flagged ? 1 : 0);
        ++out.classes[key];
        return true;
    });
    return out;
}

}  // namespace indseq
