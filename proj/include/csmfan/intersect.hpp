#pragma once

#include <cstdint>
#include <vector>

#include "csmfan/fan.hpp"

namespace csmfan {

// A generic translation vector in canonical quotient coordinates.
struct Perturbation {
    RVec v;
    uint64_t seed = 0;
    bool decreasing_default = false;  // built from the strictly decreasing lift
};

// Strictly decreasing lift v_e = (n+1-e)*D plus small distinct rational
// jitter, pushed to the quotient. This is the chamber used by the main
// degree computation.
Perturbation default_perturbation(int ambient_dim, uint64_t seed);

// Unstructured random rational vector, used when retrying after a
// degeneracy report.
Perturbation random_perturbation(int ambient_dim, uint64_t seed);

struct IntersectionPoint {
    RVec point;
    Int multiplicity;      // weight * weight * lattice index, nonzero
    Int index;             // the lattice index factor alone
    size_t cone_a, cone_b; // provenance: positions in the two fans
};

// Stable intersection of complementary-dimensional cycles as a finite point
// list: one entry per transverse cone pair whose translated cones meet with
// strictly positive barycentric coefficients. Exact-zero coefficients, or a
// translation vector lying in a deficient pair span, mean v was not generic
// and raise VDegenerate.
std::vector<IntersectionPoint> stable_intersection_points(const WeightedFan& a,
                                                          const WeightedFan& b,
                                                          const Perturbation& pert);

// Bergman fan of the uniform matroid of rank n-k+1 on n+1 elements: a
// generic tropical linear space of dimension n-k (codimension k)
WeightedFan generic_linear_space(int ambient_dim, int codim);

struct DegreeResult {
    Int degree;
    std::vector<IntersectionPoint> points;
    Perturbation used;
    int attempts = 1;
};

// Weighted point count against a generic linear space of complementary
// dimension; retries with fresh perturbations when a degeneracy is detected.
DegreeResult degree_with_points(const WeightedFan& fan, uint64_t seed);
Int degree(const WeightedFan& fan, uint64_t seed = 0);

// Support membership for Bergman fans of uniform matroids: x lies in the fan
// of uniform(rank, n+1) iff its minimum-zero lift has support of size at most
// rank-1.
bool uniform_membership(const RVec& x, int rank);

}  // namespace csmfan
