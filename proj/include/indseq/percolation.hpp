#pragma once

#include <cstdint>
#include <vector>

#include "indseq/degree_sequence.hpp"
#include "indseq/graph.hpp"
#include "indseq/sampler.hpp"

namespace indseq {

struct PercolationOutcome {
    VertexSubset survivors;            // 1-based vertex ids of the host graph
    Graph inducedGraph;
    std::vector<int> inducedDegreesRaw;  // by survivor order (vertex-indexed view)
    DegreeSequence inducedSeq;           // sorted, zeros allowed
    Count sizeS = 0;                     // |S|
    Count degS = 0;                      // d(S) in the host graph
    std::uint64_t seed = 0;
};

/// Site percolation: keep each vertex independently with probability p.
/// One RNG draw per vertex in index order from a dedicated stream, so the
/// survivor set depends only on (seed, n, p). p in [0, 1].
PercolationOutcome percolate_site(const Graph& g, double p, std::uint64_t seed);

/// Fixed-subset pipeline: sample G uniformly from d, return G[S] with its
/// degree sequence. Deterministic given cfg.seed.
PercolationOutcome fixed_subset_pipeline(const DegreeSequence& d, const VertexSubset& S,
                                         const SamplerConfig& cfg, SampleInfo* info = nullptr);

}  // namespace indseq
