#include "indseq/degree_sequence.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace indseq {

namespace {

int parse_int(const std::string& token, const char* what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": non-integer token '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument(std::string(what) + ": non-integer token '" + token + "'");
    return static_cast<int>(v);
}

}  // namespace

DegreeSequence DegreeSequence::build(std::vector<int> entries, bool permissive) {
    if (entries.empty()) throw std::invalid_argument("degree sequence: empty input");
    const int least = permissive ? 0 : 1;
    for (int e : entries) {
        if (e < least) {
            std::ostringstream msg;
            msg << "degree sequence: entry " << e << " below minimum " << least;
            throw std::invalid_argument(msg.str());
        }
    }
    std::sort(entries.begin(), entries.end());
    DegreeSequence d;
    d.entries_ = std::move(entries);
    for (int e : d.entries_) {
        d.m_ += e;
        d.m2_ += static_cast<Count>(e) * e;
        d.hist_[e] += 1;
    }
    return d;
}

DegreeSequence DegreeSequence::from_entries(std::vector<int> entries) {
    return build(std::move(entries), false);
}

DegreeSequence DegreeSequence::from_entries_permissive(std::vector<int> entries) {
    return build(std::move(entries), true);
}

int DegreeSequence::at(Count pos) const {
    if (pos < 1 || pos > n()) throw std::out_of_range("degree sequence index out of range");
    return entries_[static_cast<std::size_t>(pos - 1)];
}

Count DegreeSequence::count_of(int k) const {
    auto it = hist_.find(k);
    return it == hist_.end() ? 0 : it->second;
}

std::uint64_t DegreeSequence::digest() const {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (int e : entries_) {
        auto v = static_cast<std::uint64_t>(static_cast<std::uint32_t>(e));
        for (int shift = 0; shift < 32; shift += 8) {
            h ^= (v >> shift) & 0xffULL;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

DegreeSequence load_sequence(std::istream& in, LoadOptions opts) {
    std::vector<int> entries;
    std::string token;
    while (in >> token) entries.push_back(parse_int(token, "degree sequence"));
    if (opts.permissive) return DegreeSequence::from_entries_permissive(std::move(entries));
    return DegreeSequence::from_entries(std::move(entries));
}

DegreeSequence load_sequence_file(const std::string& path, LoadOptions opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence file: " + path);
    return load_sequence(in, opts);
}

VertexSubset VertexSubset::make(const std::vector<int>& degreeByVertex, std::vector<int> indices,
                                Count total) {
    std::sort(indices.begin(), indices.end());
    const auto n = static_cast<Count>(degreeByVertex.size());
    Count dS = 0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const int idx = indices[i];
        if (idx < 1 || idx > n) throw std::out_of_range("subset index out of range");
        if (i > 0 && indices[i - 1] == idx)
            throw std::invalid_argument("subset contains a duplicate index");
        dS += degreeByVertex[static_cast<std::size_t>(idx - 1)];
    }
    VertexSubset s;
    s.indices_ = std::move(indices);
    s.dS_ = dS;
    s.m_ = total;
    return s;
}

VertexSubset VertexSubset::from_indices(const DegreeSequence& d, std::vector<int> indices) {
    return make(d.entries(), std::move(indices), d.total_degree());
}

VertexSubset VertexSubset::from_degree_array(const std::vector<int>& degreeByVertex,
                                             std::vector<int> indices) {
    const Count total = std::accumulate(degreeByVertex.begin(), degreeByVertex.end(), Count{0});
    return make(degreeByVertex, std::move(indices), total);
}

bool VertexSubset::contains(int pos) const {
    return std::binary_search(indices_.begin(), indices_.end(), pos);
}

VertexSubset load_subset(std::istream& in, const DegreeSequence& d) {
    std::vector<int> indices;
    std::string token;
    while (in >> token) indices.push_back(parse_int(token, "subset"));
    return VertexSubset::from_indices(d, std::move(indices));
}

VertexSubset load_subset_file(const std::string& path, const DegreeSequence& d) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open subset file: " + path);
    return load_subset(in, d);
}

bool is_graphical(const std::vector<int>& degrees) {
    const auto n = static_cast<Count>(degrees.size());
    if (n == 0) return true;
    std::vector<Count> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    if (d.back() < 0) return false;
    if (d.front() >= n) return false;
    const Count sum = std::accumulate(d.begin(), d.end(), Count{0});
    if (sum % 2 != 0) return false;

    // Erdos-Gallai: for each k,
    //   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
    std::vector<Count> suffix(d.size() + 1, 0);
    for (std::size_t i = d.size(); i-- > 0;) suffix[i] = suffix[i + 1] + d[i];

    Count prefix = 0;
    for (Count k = 1; k <= n; ++k) {
        prefix += d[static_cast<std::size_t>(k - 1)];
        // first index >= k whose entry is < k (entries are non-increasing)
        auto it = std::lower_bound(d.begin() + static_cast<std::ptrdiff_t>(k), d.end(), k,
                                   [](Count x, Count bound) { return x >= bound; });
        const auto firstSmall = static_cast<Count>(it - d.begin());
        const Count minsum = k * (firstSmall - k) + suffix[static_cast<std::size_t>(firstSmall)];
        if (prefix > k * (k - 1) + minsum) return false;
    }
    return true;
}

bool is_graphical(const DegreeSequence& d) { return is_graphical(d.entries()); }

GraphicalityDiagnosis explain_graphicality(const std::vector<int>& degrees) {
    GraphicalityDiagnosis out;
    out.graphical = is_graphical(degrees);
    const Count sum = std::accumulate(degrees.begin(), degrees.end(), Count{0});
    out.oddSum = (sum % 2) != 0;
    if (out.graphical || out.oddSum) return out;

    const auto n = static_cast<Count>(degrees.size());
    std::vector<Count> asc(degrees.begin(), degrees.end());
    std::sort(asc.begin(), asc.end());
    std::vector<Count> prefixAsc(asc.size() + 1, 0);
    for (std::size_t i = 0; i < asc.size(); ++i) prefixAsc[i + 1] = prefixAsc[i] + asc[i];
    const Count total = prefixAsc[asc.size()];

    // A = the a largest entries, B = the b smallest; that choice maximizes
    // the left side for each (a, b), so scanning all disjoint pairs finds a
    // witness whenever one exists.
    for (Count a = 1; a < n; ++a) {
        const Count sumA = total - prefixAsc[static_cast<std::size_t>(n - a)];
        for (Count b = 1; a + b <= n; ++b) {
            const Count sumB = prefixAsc[static_cast<std::size_t>(b)];
            const Count lhs = sumA - sumB;
            const Count rhs = a * (n - 1 - b);
            if (lhs > rhs) {
                out.witness = KorenWitness{a, b, lhs, rhs};
                return out;
            }
        }
    }
    return out;
}

}  // namespace indseq
