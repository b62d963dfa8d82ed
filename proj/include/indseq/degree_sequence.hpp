#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace indseq {

using Count = std::int64_t;

/// Canonical degree sequence: entries stored non-decreasing with cached
/// summary statistics (M, M2, max entry, value histogram).
///
/// The strict form requires every entry >= 1. Induced and model sequences
/// may contain zeros and go through the permissive constructor instead.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Entries are sorted on construction; throws std::invalid_argument on
    /// an empty input or (strict form) an entry < 1.
    static DegreeSequence from_entries(std::vector<int> entries);
    static DegreeSequence from_entries_permissive(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    /// 1-based access matching the sorted indexing used for subsets.
    int at(Count pos) const;

    Count n() const { return static_cast<Count>(entries_.size()); }
    Count total_degree() const { return m_; }           // M
    Count total_degree_squared() const { return m2_; }  // M2
    int max_degree() const { return entries_.empty() ? 0 : entries_.back(); }
    const std::map<int, Count>& histogram() const { return hist_; }
    Count count_of(int k) const;

    bool odd_sum() const { return (m_ & 1) != 0; }
    bool has_zero() const { return !entries_.empty() && entries_.front() == 0; }

    /// FNV-1a over the sorted entries; used to stamp derived artifacts.
    std::uint64_t digest() const;

private:
    static DegreeSequence build(std::vector<int> entries, bool permissive);

    std::vector<int> entries_;
    Count m_ = 0;
    Count m2_ = 0;
    std::map<int, Count> hist_;
};

struct LoadOptions {
    bool permissive = false;  // admit zero entries
};

/// Parses whitespace-separated integers. Input order is not preserved; the
/// sequence is canonicalized by sorting. An odd total is not an error (the
/// sequence carries odd_sum() as a warning flag) so derived sequences can
/// round-trip through the same loader.
DegreeSequence load_sequence(std::istream& in, LoadOptions opts = {});
DegreeSequence load_sequence_file(const std::string& path, LoadOptions opts = {});

/// The set S: sorted 1-based positions into a sorted degree sequence, with
/// the derived totals d(S), gamma = d(S)/M and d(complement).
class VertexSubset {
public:
    VertexSubset() = default;

    /// Positions are validated against [1, d.n()], deduplicated indices are
    /// an error, order in the input does not matter.
    static VertexSubset from_indices(const DegreeSequence& d, std::vector<int> indices);

    /// Same, but against an arbitrary per-vertex degree array (used for
    /// survivor sets of concrete graphs, where vertex ids are not sorted
    /// by degree).
    static VertexSubset from_degree_array(const std::vector<int>& degreeByVertex,
                                          std::vector<int> indices);

    const std::vector<int>& indices() const { return indices_; }
    Count size() const { return static_cast<Count>(indices_.size()); }       // s
    Count degree_total() const { return dS_; }                               // d(S)
    Count complement_degree_total() const { return m_ - dS_; }               // d(Sbar)
    Count sequence_total() const { return m_; }                              // M
    double gamma() const { return m_ > 0 ? static_cast<double>(dS_) / static_cast<double>(m_) : 0.0; }
    bool contains(int pos) const;

private:
    static VertexSubset make(const std::vector<int>& degreeByVertex, std::vector<int> indices,
                             Count total);

    std::vector<int> indices_;  // 1-based, sorted, unique
    Count dS_ = 0;
    Count m_ = 0;
};

/// Subset file: whitespace-separated 1-based indices.
VertexSubset load_subset(std::istream& in, const DegreeSequence& d);
VertexSubset load_subset_file(const std::string& path, const DegreeSequence& d);

/// Erdos-Gallai test. Zeros allowed; odd sums return false.
bool is_graphical(const std::vector<int>& degrees);
bool is_graphical(const DegreeSequence& d);

/// Diagnostic counterpart: when a sequence with even sum is not graphical,
/// there are disjoint non-empty sets A, B with
///   sum_{i in A} d(i) - sum_{j in B} d(j) > |A| (n - 1 - |B|),
/// and a maximizing pair can always be taken as the |A| largest entries
/// against the |B| smallest. Quadratic scan; intended for small inputs.
struct KorenWitness {
    Count a = 0;     // |A|, the a largest entries
    Count b = 0;     // |B|, the b smallest entries
    Count lhs = 0;   // sum_A - sum_B
    Count rhs = 0;   // a (n - 1 - b)
};

struct GraphicalityDiagnosis {
    bool graphical = false;
    bool oddSum = false;
    std::optional<KorenWitness> witness;  // present iff even sum and not graphical
};

GraphicalityDiagnosis explain_graphicality(const std::vector<int>& degrees);

}  // namespace indseq
