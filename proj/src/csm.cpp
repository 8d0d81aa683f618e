#include "csmfan/csm.hpp"

#include <algorithm>

#include "csmfan/activities.hpp"

namespace csmfan {

CsmCycle csm_cycle(const Matroid& m, int k) {
    if (!m.is_loopless()) throw LoopPresent();
    const int d = m.rank() - 1;
    if (k < 0 || k > d) throw KOutOfRange();

    CsmCycle out;
    out.k = k;
    const Int sign = neg_one_pow(d - k);
    struct Entry {
        Cone cone;
        FlagOfFlats flag;
        Int weight;
    };
    std::vector<Entry> entries;
    for (const FlagOfFlats& flag : proper_flags(m, k + 1)) {
        Int w = sign * beta_product(m, flag);
        if (w == 0) {
            out.dropped_flags.push_back(flag);
            continue;
        }
        entries.push_back({cone_of_flag(flag), flag, std::move(w)});
    }
    // keep weighted_flags in the same ray-lexicographic order the fan uses,
    // so cone indices in intersection points map back to flags
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.cone.rays < b.cone.rays; });
    std::vector<WeightedCone> cones;
    for (Entry& e : entries) {
        cones.push_back({e.cone, e.weight});
        out.weighted_flags.push_back({std::move(e.flag), std::move(e.weight)});
    }
    out.fan = WeightedFan(m.ground_size() - 1, k, std::move(cones));
    return out;
}

Int csm_degree_geometric(const Matroid& m, int k, uint64_t seed) {
    return degree(csm_cycle(m, k).fan, seed);
}

Int csm_degree_combinatorial(const Matroid& m, int k) {
    if (!m.is_loopless()) throw LoopPresent();
    const int d = m.rank() - 1;
    if (k < 0 || k > d) throw KOutOfRange();
    Int total = 0;
    for (const FlagOfFlats& flag : increasing_flags(m, k + 1))
        total += beta_product(m, flag);
    return neg_one_pow(d - k) * total;
}

TheoremReport verify_main_theorem(const Matroid& m, uint64_t seed) {
    if (!m.is_loopless()) throw LoopPresent();
    const int d = m.rank() - 1;
    TheoremReport report;
    report.matroid_name = m.name();
    report.rank = m.rank();
    report.all_pass = true;

    const TuttePolynomial t = tutte(m);
    for (int k = 0; k <= d; ++k) {
        TheoremRow row;
        row.k = k;
        row.geometric = csm_degree_geometric(m, k, seed);
        row.combinatorial = csm_degree_combinatorial(m, k);
        row.tutte = neg_one_pow(d - k) * t.coeff(k + 1, 0);
        row.pass = (row.geometric == row.combinatorial) && (row.combinatorial == row.tutte);
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace csmfan
