#include "indseq/model_sequence.hpp"

#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "indseq/condition.hpp"

namespace indseq {

const char* to_string(ModelKind k) {
    return k == ModelKind::FixedSubset ? "dH" : "dA";
}

Count ModelSequence::count_of(int k) const {
    auto it = hist.find(k);
    return it == hist.end() ? 0 : it->second;
}

std::vector<int> ModelSequence::to_entries() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length));
    for (auto [k, cnt] : hist)
        for (Count i = 0; i < cnt; ++i) out.push_back(k);
    return out;
}

namespace {

using LoadedTables = std::vector<std::pair<Count, std::shared_ptr<const BinomialTable>>>;

LoadedTables load_tables(const std::map<int, Count>& degreeCounts, double q,
                         BinomialTableCache* cache, BinomialTableCache& local) {
    BinomialTableCache& use = cache ? *cache : local;
    LoadedTables out;
    out.reserve(degreeCounts.size());
    for (auto [j, cnt] : degreeCounts) out.emplace_back(cnt, use.get(j, q));
    return out;
}

/// Shared core: counts per distinct degree, a scale factor applied to the
/// cdf sums (1 for d_H, p for d_A), and the expected total length.
ModelSequence accumulate(const LoadedTables& tables, int maxDeg, double scale,
                         Count expectedLength) {
    ModelSequence out;
    FloorTieLog ties;
    Count prev = 0;
    for (int k = 0; k <= maxDeg; ++k) {
        KahanSum sum;
        for (const auto& [cnt, table] : tables)
            sum.add(static_cast<double>(cnt) * table->cdf_at(k));
        const Count nk = floor_half_up(scale * sum.value(), &ties) - prev;
        if (nk < 0)
            throw std::logic_error("model sequence: cumulative counts decreased");
        if (nk > 0) out.hist[k] = nk;
        prev += nk;
    }
    out.length = prev;
    out.tieEvents = ties.events;
    if (out.length != expectedLength) {
        std::ostringstream msg;
        msg << "model sequence: length " << out.length << " != expected " << expectedLength;
        throw std::logic_error(msg.str());
    }
    return out;
}

}  // namespace

ModelSequence build_dh(const DegreeSequence& d, const VertexSubset& S, double delta,
                       BinomialTableCache* cache, bool permissiveRate) {
    if (S.size() == 0) throw std::invalid_argument("build_dh: S must be non-empty");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("build_dh: delta must be in (0, 1]");
    const double gamma = S.gamma();
    if (!permissiveRate && (gamma <= 0.0 || gamma >= 1.0))
        throw std::invalid_argument("build_dh: gamma must lie strictly between 0 and 1");

    std::map<int, Count> degreeCounts;
    int maxDeg = 0;
    for (int idx : S.indices()) {
        const int deg = d.at(idx);
        ++degreeCounts[deg];
        maxDeg = std::max(maxDeg, deg);
    }

    BinomialTableCache local;
    const LoadedTables tables = load_tables(degreeCounts, gamma, cache, local);
    ModelSequence out = accumulate(tables, maxDeg, 1.0, S.size());
    out.kind = ModelKind::FixedSubset;

    const double co = cutoff_fixed(gamma, static_cast<double>(d.total_degree()), delta);
    out.params = ModelParams{ModelKind::FixedSubset, gamma, delta, co, d.digest()};

    // ytilde over the small-degree part of S: degrees at most co.
    int maxSmall = 0;
    for (auto [j, cnt] : degreeCounts)
        if (static_cast<double>(j) <= co) maxSmall = std::max(maxSmall, j);
    out.ytilde.assign(static_cast<std::size_t>(maxSmall) + 1, 0.0);
    for (int i = 0; i <= maxSmall; ++i) {
        KahanSum sum;
        for (const auto& [cnt, table] : tables) {
            if (static_cast<double>(table->trials) > co) continue;
            sum.add(static_cast<double>(cnt) * table->pmf_at(i));
        }
        out.ytilde[static_cast<std::size_t>(i)] = sum.value();
    }
    return out;
}

ModelSequence build_da(const DegreeSequence& d, double p, double delta,
                       BinomialTableCache* cache, bool permissiveRate) {
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("build_da: delta must be in (0, 1]");
    const bool inRange = permissiveRate ? (p >= 0.0 && p <= 1.0) : (p > 0.0 && p < 1.0);
    if (!inRange) throw std::invalid_argument("build_da: p must lie strictly between 0 and 1");

    const std::map<int, Count>& degreeCounts = d.histogram();
    const Count expectedLength = floor_half_up(p * static_cast<double>(d.n()));
    const int maxDeg = d.max_degree();

    BinomialTableCache local;
    const LoadedTables tables = load_tables(degreeCounts, p, cache, local);
    ModelSequence out = accumulate(tables, maxDeg, p, expectedLength);
    out.kind = ModelKind::Percolation;

    const double co = cutoff_percolation(p <= 0.0 ? 1.0 : p,
                                         static_cast<double>(d.total_degree()), delta);
    out.params = ModelParams{ModelKind::Percolation, p, delta, co, d.digest()};

    out.wtilde.assign(static_cast<std::size_t>(maxDeg) + 1, 0.0);
    for (int k = 0; k <= maxDeg; ++k) {
        KahanSum sum;
        for (const auto& [cnt, table] : tables)
            sum.add(static_cast<double>(cnt) * table->pmf_at(k));
        out.wtilde[static_cast<std::size_t>(k)] = p * sum.value();
    }
    return out;
}

ModelStats model_stats(const ModelSequence& m) {
    ModelStats s;
    for (auto [k, cnt] : m.hist) {
        s.M += static_cast<Count>(k) * cnt;
        s.M2 += static_cast<Count>(k) * k * cnt;
        if (k == 0)
            s.n0 += cnt;
        else
            s.nonZeroCount += cnt;
    }
    return s;
}

}  // namespace indseq
