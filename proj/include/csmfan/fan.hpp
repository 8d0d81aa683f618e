#pragma once

#include <vector>

#include "csmfan/flags.hpp"
#include "csmfan/linalg.hpp"
#include "csmfan/matroid.hpp"

namespace csmfan {

// All lattice data lives in the quotient of Z^(ground_size) by the all-ones
// vector, with canonical coordinates obtained by subtracting coordinate 0
// from every entry and dropping position 0. The ambient dimension is
// ground_size - 1.

// canonical quotient image of a lift in Z^(n+1)
IVec quotient_of_lift(const IVec& lift);

// canonical image of the indicator vector e_F
IVec flat_vector(Subset f, int ground_size);

// lift of a rational quotient point to the representative whose minimum
// coordinate is zero (n+1 coordinates)
RVec min_lift(const RVec& point);

// Simplicial rational cone spanned by primitive rays that form a basis of a
// saturated sublattice; this is checked at construction.
struct Cone {
    int ambient = 0;
    std::vector<IVec> rays;  // sorted lexicographically

    Cone(int ambient_dim, std::vector<IVec> ray_list);
    int dim() const { return static_cast<int>(rays.size()); }
    bool operator==(const Cone& o) const {
        return ambient == o.ambient && rays == o.rays;
    }
};

struct WeightedCone {
    Cone cone;
    Int weight;  // nonzero
};

// Pure-dimensional weighted fan, stored as its maximal cones. Zero-weight
// cones are dropped at construction; cones are kept in ray-lexicographic
// order.
class WeightedFan {
  public:
    WeightedFan(int ambient_dim, int dim, std::vector<WeightedCone> cones);

    int ambient() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<WeightedCone>& cones() const { return cones_; }

  private:
    int ambient_;
    int dim_;
    std::vector<WeightedCone> cones_;
};

// cone with one ray per intermediate flat of the flag; the top flat maps to
// zero in the quotient
Cone cone_of_flag(const FlagOfFlats& flag);

// all complete flag cones with weight one
WeightedFan bergman_fan(const Matroid& m);

struct RidgeFailure {
    std::vector<IVec> ridge_rays;
    IVec defect;  // weighted sum of primitive generators, not in the ridge span
};

struct BalanceReport {
    bool balanced = true;
    int ridges_checked = 0;
    std::vector<RidgeFailure> failures;
};

// Checks the balancing condition at every ridge. Ridges are identified as
// shared ray subsets of maximal cones, which is exact for the simplicial
// flag fans in scope.
BalanceReport balancing_check(const WeightedFan& fan);

// index of the sum of the two saturated sublattices spanned by the given
// bases inside the full lattice; requires the counts to add up to the
// ambient dimension
Int lattice_index(const std::vector<IVec>& basis_a, const std::vector<IVec>& basis_b);

}  // namespace csmfan
