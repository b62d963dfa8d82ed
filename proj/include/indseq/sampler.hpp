#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indseq/degree_sequence.hpp"
#include "indseq/graph.hpp"
#include "indseq/rng.hpp"

namespace indseq {

enum class SampleMethod { Auto, Rejection, SwitchChain };

const char* to_string(SampleMethod m);
SampleMethod sample_method_from_string(const std::string& s);

struct SamplerConfig {
    SampleMethod method = SampleMethod::Auto;
    std::uint64_t seed = 0;
    Count switchSteps = -1;        // -1: ceil(switchFactor * m * log m)
    double switchFactor = 20.0;
    Count maxRejections = 2000000; // pairing attempts before giving up
};

struct SampleInfo {
    SampleMethod methodUsed = SampleMethod::Rejection;
    Count rejections = 0;      // discarded non-simple pairings
    Count switchSteps = 0;     // proposed swaps
    Count switchAccepted = 0;  // applied swaps
    std::uint64_t seed = 0;
    bool autoFellBack = false;
    std::string note;
};

/// Expected pairing-model retries until a simple graph: exp(lambda + lambda^2)
/// with lambda = (M2/M - 1)/2. Drives the Auto method choice.
double expected_rejection_retries(const DegreeSequence& d);

/// Uniform sample from the simple graphs with degree sequence d.
///
/// Rejection resamples the stub-pairing model until the result is simple,
/// which is exactly uniform. The switch chain runs random degree-preserving
/// double-edge swaps from a greedy initial realization and is only
/// approximately uniform; reports must carry that caveat. Auto picks
/// rejection when it is affordable (small max degree and the expected retry
/// count fits the budget) and otherwise falls back to the chain with a note.
///
/// Throws std::invalid_argument when d is not graphical and SamplerError
/// when the rejection budget is exhausted.
Graph sample_uniform(const DegreeSequence& d, const SamplerConfig& cfg, SampleInfo* info = nullptr);

struct SamplerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Greedy realization (highest residual degree first). Deterministic.
Graph havel_hakimi_graph(const DegreeSequence& d);

/// Visits every labeled simple graph in which vertex i has degree
/// degreesByVertex[i], each exactly once, in a fixed lexicographic order.
/// The visitor returns false to stop early.
void for_each_realization(const std::vector<int>& degreesByVertex,
                          const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit);

/// All realizations of d (vertex i gets the i-th sorted entry).
/// Throws when d.n() exceeds limit.
std::vector<Graph> enumerate_graphs(const DegreeSequence& d, int limit = 8);
bool realization_exists(const std::vector<int>& degreesByVertex);
Count count_realizations(const std::vector<int>& degreesByVertex);

/// Query describing how enumeration classes are keyed and filtered.
/// Vertices are 1-based positions into the sorted sequence. Induced degree
/// means degree into S.
struct ClassQuery {
    std::vector<int> degreeVertices;                    // key components: d_S(v)
    std::optional<std::pair<int, int>> edgeFlag;        // key component: edge present (0/1)
    std::vector<std::pair<int, int>> conditions;        // require d_S(v) = i
};

struct GraphClassIndex {
    std::map<std::vector<int>, Count> classes;  // key -> count among condition-matching graphs
    Count total = 0;                            // all realizations of d
    Count matching = 0;                         // realizations satisfying `conditions`

    Count class_count(const std::vector<int>& key) const;
};

/// Exact class cardinalities over the full enumeration (e.g. |A_v^i|).
GraphClassIndex class_counts(const DegreeSequence& d, const VertexSubset& S, const ClassQuery& q,
                             int limit = 8);

}  // namespace indseq
