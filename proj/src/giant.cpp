#include "indseq/giant.hpp"

#include <algorithm>
#include <stdexcept>

namespace indseq {

GiantStats joos_stats(const std::map<int, Count>& hist, Count length) {
    GiantStats s;
    s.n = length;
    Count checked = 0;
    for (auto [k, cnt] : hist) {
        if (k < 0 || cnt < 0) throw std::invalid_argument("joos_stats: negative histogram entry");
        checked += cnt;
        s.M += static_cast<Count>(k) * cnt;
        if (k != 2) s.MJ += static_cast<Count>(k) * cnt;
    }
    if (checked != length) throw std::invalid_argument("joos_stats: histogram does not sum to length");
    if (length == 0) return s;

    // Walk value groups in increasing order. The prefix sum of d(d-2) can
    // first turn positive only inside a group with k >= 3, and within such a
    // group the crossing position has a closed form.
    Count running = 0;
    Count position = 0;
    Count degreesBefore = 0;  // sum of entries strictly before jd
    Count jd = length;
    bool found = false;
    for (auto [k, cnt] : hist) {
        const Count w = static_cast<Count>(k) * (k - 2);
        if (!found && w > 0) {
            const Count t = (-running) / w + 1;  // first count inside the group crossing zero
            if (t <= cnt) {
                jd = position + t;
                degreesBefore += static_cast<Count>(k) * (t - 1);
                found = true;
            }
        }
        if (!found) degreesBefore += static_cast<Count>(k) * cnt;
        running += w * cnt;
        position += cnt;
    }
    if (!found) {
        // jd = n; R covers the last entry only.
        s.jd = length;
        s.R = hist.empty() ? 0 : hist.rbegin()->first;
        return s;
    }
    s.jd = jd;
    s.R = s.M - degreesBefore;
    return s;
}

GiantStats joos_stats(const std::vector<int>& sortedEntries) {
    if (!std::is_sorted(sortedEntries.begin(), sortedEntries.end()))
        throw std::invalid_argument("joos_stats: input must be sorted non-decreasing");
    std::map<int, Count> hist;
    for (int e : sortedEntries) ++hist[e];
    return joos_stats(hist, static_cast<Count>(sortedEntries.size()));
}

GiantStats joos_stats(const ModelSequence& m) { return joos_stats(m.hist, m.length); }

bool well_behaved(const GiantStats& s, double lambda) {
    return static_cast<double>(s.MJ) >= lambda;
}

namespace {

GiantVerdict verdict(const GiantStats& stats, double eps, double scale) {
    if (!(eps > 0.0)) throw std::invalid_argument("giant predicate: eps must be positive");
    if (!(scale > 0.0)) throw std::invalid_argument("giant predicate: normalization is zero");
    GiantVerdict v;
    v.eps = eps;
    v.ratio = static_cast<double>(stats.R) / scale;
    v.hasGiant = v.ratio >= eps;
    return v;
}

}  // namespace

GiantVerdict giant_predicate_fixed(const ModelSequence& dh, double eps, const DegreeSequence& d,
                                   const VertexSubset& S) {
    const double gamma = S.gamma();
    return verdict(joos_stats(dh), eps, gamma * gamma * static_cast<double>(d.total_degree()));
}

GiantVerdict giant_predicate_perc(const ModelSequence& da, double eps, const DegreeSequence& d,
                                  double p) {
    return verdict(joos_stats(da), eps, p * p * static_cast<double>(d.total_degree()));
}

ClosenessReport sequence_closeness_report(const std::vector<int>& observedSorted,
                                          const ModelSequence& model) {
    const GiantStats obs = joos_stats(observedSorted);
    const GiantStats mod = joos_stats(model);

    Count obsN0 = 0;
    for (int e : observedSorted) {
        if (e != 0) break;
        ++obsN0;
    }
    Count obsM2 = 0;
    for (int e : observedSorted) obsM2 += static_cast<Count>(e) * e;
    const ModelStats modStats = model_stats(model);

    ClosenessReport r;
    r.deltaM = obs.M - mod.M;
    r.deltaM2 = obsM2 - modStats.M2;
    r.deltaR = obs.R - mod.R;
    r.deltaMJ = obs.MJ - mod.MJ;
    r.deltaN0 = obsN0 - modStats.n0;
    r.mh = mod.M;
    const double scale = r.mh > 0 ? static_cast<double>(r.mh) : 1.0;
    r.relM = static_cast<double>(r.deltaM) / scale;
    r.relM2 = static_cast<double>(r.deltaM2) / scale;
    r.relR = static_cast<double>(r.deltaR) / scale;
    r.relMJ = static_cast<double>(r.deltaMJ) / scale;
    r.relN0 = static_cast<double>(r.deltaN0) / scale;
    return r;
}

}  // namespace indseq
