#pragma once

#include <vector>

#include "csmfan/numeric.hpp"

namespace csmfan {

using IVec = std::vector<Int>;
using IMat = std::vector<std::vector<Int>>;  // row-major
using RVec = std::vector<Rat>;
using RMat = std::vector<std::vector<Rat>>;

// determinant of a square integer matrix (fraction-free Bareiss); the
// determinant of the empty matrix is 1
Int det_int(IMat a);

// rank over Q
int rank_int(const IMat& a);

// Smith normal form invariant factors: nonnegative, each dividing the next,
// one entry per nonzero diagonal position (so the count equals the rank)
std::vector<Int> snf_invariant_factors(IMat a);

// exact solve of a square rational system
struct SolveOutcome {
    enum Kind { kUnique, kInconsistent, kUnderdetermined };
    Kind kind = kInconsistent;
    RVec solution;  // populated iff kUnique
};
SolveOutcome solve_square(RMat a, RVec rhs);

// the same for an integer system; nonsingular systems run fraction-free
SolveOutcome solve_int_system(const IMat& a, const IVec& rhs);

// whether target lies in the rational span of the given vectors
bool in_rational_span(const std::vector<IVec>& vectors, const IVec& target);

}  // namespace csmfan
