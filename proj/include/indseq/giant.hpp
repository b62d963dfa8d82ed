#pragma once

#include <map>
#include <vector>

#include "indseq/degree_sequence.hpp"
#include "indseq/model_sequence.hpp"

namespace indseq {

/// Threshold statistics of a non-decreasing sequence (zeros allowed):
///   jd = min{ j : sum_{i<=j} d(i)(d(i)-2) > 0 }, or n when the prefix sum
///        never turns positive;
///   R  = sum_{i>=jd} d(i);
///   MJ = sum over entries != 2 (equivalently M - 2 n_2).
/// R against MJ governs whether a giant component exists.
struct GiantStats {
    Count jd = 0;  // 1-based; 0 only for an empty sequence
    Count R = 0;
    Count MJ = 0;
    Count n = 0;
    Count M = 0;
};

/// Histogram form; exact integer arithmetic throughout.
GiantStats joos_stats(const std::map<int, Count>& hist, Count length);
/// Vector form; throws std::invalid_argument when the input is not sorted.
GiantStats joos_stats(const std::vector<int>& sortedEntries);
GiantStats joos_stats(const ModelSequence& m);

/// "Well-behaved": MJ at least lambda (any lambda(n) -> infinity qualifies;
/// log n is the conventional default).
bool well_behaved(const GiantStats& s, double lambda);

struct GiantVerdict {
    bool hasGiant = false;
    double ratio = 0.0;  // R / (gamma^2 M), resp. R / (p^2 M)
    double eps = 0.0;
};

/// Threshold predicate for a fixed subset: ratio = R(d_H) / (gamma^2 M).
/// The raw ratio is always surfaced beside the boolean since the threshold
/// quantifies over "some constant eps > 0". Throws when gamma^2 M = 0.
GiantVerdict giant_predicate_fixed(const ModelSequence& dh, double eps, const DegreeSequence& d,
                                   const VertexSubset& S);

/// Percolation counterpart: ratio = R(d_A) / (p^2 M).
GiantVerdict giant_predicate_perc(const ModelSequence& da, double eps, const DegreeSequence& d,
                                  double p);

/// Gaps between an observed induced sequence and its model counterpart for
/// the quantities the closeness lemmas concern. Relative values are against
/// the model's total degree M_H.
struct ClosenessReport {
    Count deltaM = 0;
    Count deltaM2 = 0;
    Count deltaR = 0;
    Count deltaMJ = 0;
    Count deltaN0 = 0;
    Count mh = 0;  // M of the model sequence
    double relM = 0.0;
    double relM2 = 0.0;
    double relR = 0.0;
    double relMJ = 0.0;
    double relN0 = 0.0;
};

ClosenessReport sequence_closeness_report(const std::vector<int>& observedSorted,
                                          const ModelSequence& model);

}  // namespace indseq
