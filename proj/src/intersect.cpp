#include "csmfan/intersect.hpp"

#include <random>
#include <set>

namespace csmfan {

namespace {

constexpr long kSpacing = 1 << 20;    // dominant gap between lift entries
constexpr long kJitterDen = 1 << 17;  // jitter stays well below 1

}  // namespace

Perturbation default_perturbation(int ambient_dim, uint64_t seed) {
    const int n1 = ambient_dim + 1;  // lift length
    // mt19937_64 with plain modulo keeps the stream portable across
    // standard libraries
    std::mt19937_64 rng(seed ^ 0x5eedULL);

    // distinct jitter numerators
    std::vector<long> jitter(n1);
    std::set<long> seen;
    for (int e = 0; e < n1; ++e) {
        long j = static_cast<long>(rng() % kJitterDen);
        while (!seen.insert(j).second) j = static_cast<long>(rng() % kJitterDen);
        jitter[e] = j;
    }

    Perturbation p;
    p.seed = seed;
    p.decreasing_default = true;
    p.v.resize(ambient_dim);
    // canonical coordinates: v_e - v_0 for e = 1..n
    for (int e = 1; e < n1; ++e) {
        Rat lift_e = Rat(Int(n1 - e) * kSpacing) + make_rat(Int(jitter[e]), Int(kJitterDen));
        Rat lift_0 = Rat(Int(n1) * kSpacing) + make_rat(Int(jitter[0]), Int(kJitterDen));
        p.v[e - 1] = lift_e - lift_0;
    }
    return p;
}

Perturbation random_perturbation(int ambient_dim, uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xa17e2ULL);
    Perturbation p;
    p.seed = seed;
    p.decreasing_default = false;
    p.v.resize(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) {
        long num = static_cast<long>(rng() % (1UL << 25)) - (1L << 24);
        p.v[i] = make_rat(Int(num), Int(kJitterDen));
    }
    return p;
}

std::vector<IntersectionPoint> stable_intersection_points(const WeightedFan& a,
                                                          const WeightedFan& b,
                                                          const Perturbation& pert) {
    if (a.ambient() != b.ambient() || a.dim() + b.dim() != a.ambient())
        throw DimensionMismatch();
    const int n = a.ambient();
    if (static_cast<int>(pert.v.size()) != n) throw DimensionMismatch();

    // clear denominators of v once; positivity of the coefficients is
    // unaffected by the positive scale
    Int scale = 1;
    for (const Rat& q : pert.v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                        q.get_den().get_mpz_t());
    IVec rhs(n);
    for (int i = 0; i < n; ++i) {
        Rat scaled = pert.v[i] * Rat(scale);
        rhs[i] = scaled.get_num();  // denominator is 1 after scaling
    }

    std::vector<IntersectionPoint> out;
    for (size_t ia = 0; ia < a.cones().size(); ++ia) {
        const auto& ca = a.cones()[ia];
        for (size_t ib = 0; ib < b.cones().size(); ++ib) {
            const auto& cb = b.cones()[ib];
            const int k = ca.cone.dim();

            // solve  sum a_i r_i - sum b_j s_j = v  (scaled by `scale`)
            IMat mat(n, IVec(n, Int(0)));
            for (int col = 0; col < k; ++col)
                for (int row = 0; row < n; ++row)
                    mat[row][col] = ca.cone.rays[col][row];
            for (int col = 0; col < n - k; ++col)
                for (int row = 0; row < n; ++row)
                    mat[row][k + col] = -cb.cone.rays[col][row];

            SolveOutcome sol = solve_int_system(mat, rhs);
            if (sol.kind == SolveOutcome::kInconsistent) continue;  // misses for generic v
            if (sol.kind == SolveOutcome::kUnderdetermined)
                throw VDegenerate();  // v lies in a deficient pair span

            bool inside = true;
            for (const Rat& z : sol.solution) {
                if (z == 0) throw VDegenerate();  // boundary hit: v not generic
                if (z < 0) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;

            // undo the scaling and assemble the point
            IntersectionPoint p;
            p.point.assign(n, Rat(0));
            const Rat inv_scale = make_rat(Int(1), scale);
            for (int col = 0; col < k; ++col) {
                Rat coeff = sol.solution[col] * inv_scale;
                for (int row = 0; row < n; ++row)
                    p.point[row] += coeff * Rat(ca.cone.rays[col][row]);
            }
            p.index = lattice_index(ca.cone.rays, cb.cone.rays);
            p.multiplicity = ca.weight * cb.weight * p.index;
            p.cone_a = ia;
            p.cone_b = ib;
            out.push_back(std::move(p));
        }
    }
    return out;
}

WeightedFan generic_linear_space(int ambient_dim, int codim) {
    if (codim < 0 || codim > ambient_dim) throw KOutOfRange();
    return bergman_fan(Matroid::uniform(ambient_dim - codim + 1, ambient_dim + 1));
}

DegreeResult degree_with_points(const WeightedFan& fan, uint64_t seed) {
    const WeightedFan linear = generic_linear_space(fan.ambient(), fan.dim());
    constexpr int kMaxAttempts = 40;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        uint64_t s = seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(attempt);
        Perturbation pert = (attempt < 8) ? default_perturbation(fan.ambient(), s)
                                          : random_perturbation(fan.ambient(), s);
        try {
            DegreeResult res;
            res.points = stable_intersection_points(fan, linear, pert);
            res.degree = 0;
            for (const IntersectionPoint& p : res.points) res.degree += p.multiplicity;
            res.used = std::move(pert);
            res.attempts = attempt + 1;
            return res;
        } catch (const VDegenerate&) {
            continue;
        }
    }
    throw DegenerateRetriesExhausted();
}

Int degree(const WeightedFan& fan, uint64_t seed) {
    return degree_with_points(fan, seed).degree;
}

bool uniform_membership(const RVec& x, int rank) {
    RVec lift = min_lift(x);
    int support = 0;
    for (const Rat& c : lift)
        if (c != 0) ++support;
    return support <= rank - 1;
}

}  // namespace csmfan
