#include "csmfan/fan.hpp"

#include <algorithm>
#include <map>

namespace csmfan {

IVec quotient_of_lift(const IVec& lift) {
    if (lift.empty()) throw Error("empty lift");
    IVec out(lift.size() - 1);
    for (size_t i = 1; i < lift.size(); ++i) out[i - 1] = lift[i] - lift[0];
    return out;
}

IVec flat_vector(Subset f, int ground_size) {
    IVec lift(ground_size, Int(0));
    for (int e : f.elements()) lift[e] = 1;
    return quotient_of_lift(lift);
}

RVec min_lift(const RVec& point) {
    RVec lift(point.size() + 1, Rat(0));
    for (size_t i = 0; i < point.size(); ++i) lift[i + 1] = point[i];
    Rat lo = lift[0];
    for (const Rat& x : lift) lo = std::min(lo, x);
    for (Rat& x : lift) x -= lo;
    return lift;
}

Cone::Cone(int ambient_dim, std::vector<IVec> ray_list)
    : ambient(ambient_dim), rays(std::move(ray_list)) {
    for (const IVec& r : rays)
        if (static_cast<int>(r.size()) != ambient)
            throw Error("ray has wrong ambient dimension");
    std::sort(rays.begin(), rays.end());
    if (rays.empty()) return;

    // rays must span a saturated sublattice with themselves as basis
    IMat m(rays.begin(), rays.end());
    std::vector<Int> factors = snf_invariant_factors(m);
    if (static_cast<int>(factors.size()) != dim()) throw ConeNotUnimodular();
    for (const Int& f : factors)
        if (f != 1) throw ConeNotUnimodular();
}

WeightedFan::WeightedFan(int ambient_dim, int dim, std::vector<WeightedCone> cones)
    : ambient_(ambient_dim), dim_(dim) {
    if (dim_ < 0 || dim_ > ambient_) throw Error("fan dimension out of range");
    for (WeightedCone& wc : cones) {
        if (wc.weight == 0) continue;
        if (wc.cone.ambient != ambient_) throw Error("cone in wrong ambient space");
        if (wc.cone.dim() != dim_) throw Error("fan is not pure-dimensional");
        cones_.push_back(std::move(wc));
    }
    std::sort(cones_.begin(), cones_.end(),
              [](const WeightedCone& a, const WeightedCone& b) {
                  return a.cone.rays < b.cone.rays;
              });
    for (size_t i = 1; i < cones_.size(); ++i)
        if (cones_[i].cone.rays == cones_[i - 1].cone.rays)
            throw Error("duplicate maximal cone");
}

Cone cone_of_flag(const FlagOfFlats& flag) {
    if (flag.top() != Subset::full(flag.ground_size())) throw NotProperFlag();
    std::vector<IVec> rays;
    for (int i = 1; i < flag.length(); ++i)
        rays.push_back(flat_vector(flag.chain()[i], flag.ground_size()));
    return Cone(flag.ground_size() - 1, std::move(rays));
}

WeightedFan bergman_fan(const Matroid& m) {
    if (!m.is_loopless()) throw LoopPresent();
    if (m.elements() != Subset::full(m.ground_size()))
        throw Error("Bergman fan requires full support");
    std::vector<WeightedCone> cones;
    for (const FlagOfFlats& flag : proper_flags(m, m.rank()))
        cones.push_back({cone_of_flag(flag), Int(1)});
    return WeightedFan(m.ground_size() - 1, m.rank() - 1, std::move(cones));
}

BalanceReport balancing_check(const WeightedFan& fan) {
    BalanceReport report;
    if (fan.dim() == 0 || fan.cones().empty()) return report;  // no ridges

    // ridge = (dim-1)-subset of some maximal cone's rays; for each one record
    // the cones containing it together with their leftover ray, which is the
    // primitive generator completing the ridge lattice inside the cone
    std::map<std::vector<IVec>, std::vector<std::pair<size_t, IVec>>> ridges;
    for (size_t ci = 0; ci < fan.cones().size(); ++ci) {
        const auto& rays = fan.cones()[ci].cone.rays;
        for (size_t drop = 0; drop < rays.size(); ++drop) {
            std::vector<IVec> key;
            key.reserve(rays.size() - 1);
            for (size_t j = 0; j < rays.size(); ++j)
                if (j != drop) key.push_back(rays[j]);
            ridges[key].push_back({ci, rays[drop]});
        }
    }

    for (const auto& [ridge_rays, stars] : ridges) {
        ++report.ridges_checked;
        IVec defect(fan.ambient(), Int(0));
        for (const auto& [ci, extra] : stars) {
            const Int& w = fan.cones()[ci].weight;
            for (int i = 0; i < fan.ambient(); ++i) defect[i] += w * extra[i];
        }
        if (!in_rational_span(ridge_rays, defect))
            report.failures.push_back({ridge_rays, defect});
    }
    report.balanced = report.failures.empty();
    return report;
}

Int lattice_index(const std::vector<IVec>& basis_a, const std::vector<IVec>& basis_b) {
    size_t n = basis_a.empty() ? (basis_b.empty() ? 0 : basis_b[0].size())
                               : basis_a[0].size();
    if (basis_a.size() + basis_b.size() != n)
        throw Error("lattice bases do not have complementary sizes");
    IMat m;
    m.reserve(n);
    for (const IVec& v : basis_a) m.push_back(v);
    for (const IVec& v : basis_b) m.push_back(v);
    Int d = det_int(std::move(m));
    if (d == 0) throw RankDeficient();
    return abs(d);
}

}  // namespace csmfan
