#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "indseq/binomial.hpp"
#include "indseq/degree_sequence.hpp"

namespace indseq {

enum class ModelKind { FixedSubset, Percolation };  // d_H, d_A

const char* to_string(ModelKind k);

struct ModelParams {
    ModelKind kind = ModelKind::FixedSubset;
    double rate = 0.0;           // gamma for d_H, p for d_A
    double delta = 0.0;
    double co = 0.0;             // small-degree cutoff actually used
    std::uint64_t sourceDigest = 0;
};

/// Deterministic model sequence, stored as a value histogram.
///
/// d_H (fixed S): N(k) = floor(sum_{i in S} P(Z_{d(i)} <= k) + 1/2) with
/// Z_j ~ Bin(j, gamma); n_k = N(k) - N(k-1); total length is exactly |S|.
///
/// d_A (percolation): same with N~(k) = floor(p sum_{i in V} P(X_{d(i)} <= k)
/// + 1/2), X_j ~ Bin(j, p); total length is exactly floor(np + 1/2).
struct ModelSequence {
    ModelKind kind = ModelKind::FixedSubset;
    std::map<int, Count> hist;  // k -> n_k, zero counts omitted
    Count length = 0;
    ModelParams params;

    /// d_H: ytilde[i] = sum over the small-degree part of S (entries <= co)
    /// of P(Z_{d(v)} = i).
    std::vector<double> ytilde;
    /// d_A: wtilde[k] = p * sum_{i in V} P(X_{d(i)} = k). The histogram obeys
    /// n_k = wtilde[k] +- 1.
    std::vector<double> wtilde;

    int tieEvents = 0;  // floor(x + 1/2) inputs that landed on the tie guard

    Count count_of(int k) const;
    int max_value() const { return hist.empty() ? 0 : hist.rbegin()->first; }
    /// Expanded non-decreasing sequence (length entries).
    std::vector<int> to_entries() const;
};

/// Requires a non-empty S and gamma in (0,1); gamma = 0 or 1 only with
/// permissiveRate (degenerate binomials).
ModelSequence build_dh(const DegreeSequence& d, const VertexSubset& S, double delta,
                       BinomialTableCache* cache = nullptr, bool permissiveRate = false);

/// Requires p in (0,1), or p in [0,1] with permissiveRate.
ModelSequence build_da(const DegreeSequence& d, double p, double delta,
                       BinomialTableCache* cache = nullptr, bool permissiveRate = false);

struct ModelStats {
    Count M = 0;
    Count M2 = 0;
    Count n0 = 0;
    Count nonZeroCount = 0;
};

ModelStats model_stats(const ModelSequence& m);

}  // namespace indseq
