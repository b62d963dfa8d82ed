#pragma once

#include "indseq/degree_sequence.hpp"

namespace indseq {

/// Feasibility diagnostics for the two asymptotic regimes. At practical
/// sizes the (log M)^12 factor makes `holds` essentially always false, so
/// the interesting output is `slack` (rhs/lhs), a continuous measure of how
/// far an instance is from the regime. Experiment suites run regardless and
/// record the slack in their reports.
struct ConditionReport {
    bool holds = false;   // lhs <= rhs
    double lhs = 0.0;     // Delta^2 (gamma^-1 log M)^12, resp. Delta^2 (p^-1 log M)^12
    double rhs = 0.0;     // delta d(S), resp. delta p M
    double slack = 0.0;   // rhs / lhs
    double co = 0.0;      // cutoff delta^(-1/16) gamma^-1 log M, resp. with p
    bool gammaOk = false; // gamma < 1 - c, resp. p < 1 - c
};

/// Slowest admissible decay: 1 / log log M, clamped into (0, 1].
double default_delta(double M);

/// Cutoff separating small from large degrees.
double cutoff_fixed(double gamma, double M, double delta);
double cutoff_percolation(double p, double M, double delta);

/// bo = min{co, Delta}.
double small_degree_cap(double co, int maxDegree);

/// Fixed-subset condition: Delta^2 (gamma^-1 log M)^12 <= delta d(S).
/// Requires 0 < delta <= 1 and a non-empty S. The constant c in the
/// "gamma < 1 - c" side condition is an explicit parameter.
ConditionReport check_condition_fixed_subset(const DegreeSequence& d, const VertexSubset& S,
                                             double delta, double c = 0.01);

/// Percolation condition: Delta^2 (p^-1 log M)^12 <= delta p M.
/// Requires p in (0,1); gammaOk carries the p < 1 - c boundary check.
ConditionReport check_condition_percolation(const DegreeSequence& d, double p, double delta,
                                            double c = 0.01);

}  // namespace indseq
