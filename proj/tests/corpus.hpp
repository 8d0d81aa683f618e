#pragma once

// Shared fixtures for the test suites: the named matroid corpus plus small
// brute-force oracles kept independent of the library's own computation
// paths.

#include <algorithm>
#include <random>
#include <vector>

#include "csmfan/activities.hpp"
#include "csmfan/linalg.hpp"
#include "csmfan/matroid.hpp"

namespace csmfan::testing {

inline Matroid k4() {
    return Matroid::from_graph(
               4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
        .named("K4");
}

inline Matroid k4_minus_edge() {
    return Matroid::from_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})
        .named("K4-e");
}

inline Matroid fano() {
    // all nonzero vectors of GF(2)^3 as columns
    return Matroid::from_matrix(2, {{1, 0, 0, 1, 1, 0, 1},
                                    {0, 1, 0, 1, 0, 1, 1},
                                    {0, 0, 1, 0, 1, 1, 1}})
        .named("Fano");
}

inline Matroid direct_sum_u12_u23() {
    // parallel pair on {0,1} plus a three-point line on {2,3,4}
    std::vector<Subset> bases;
    for (int a : {0, 1})
        for (Subset b : subsets_of_size(Subset::of({2, 3, 4}), 2))
            bases.push_back(b.with(a));
    return Matroid::from_bases(5, bases).named("U12+U23");
}

// the acceptance corpus
inline std::vector<Matroid> corpus() {
    return {
        Matroid::uniform(1, 2).named("U(1,2)"),
        Matroid::uniform(2, 3).named("U(2,3)"),
        Matroid::uniform(2, 4).named("U(2,4)"),
        Matroid::uniform(3, 5).named("U(3,5)"),
        Matroid::uniform(3, 6).named("U(3,6)"),
        k4(),
        k4_minus_edge(),
        fano(),
        direct_sum_u12_u23(),
    };
}

// --- independent oracles ----------------------------------------------------

// circuits by scanning all subsets with the definitional independence test
inline std::vector<Subset> oracle_circuits(const Matroid& m) {
    auto independent = [&](Subset s) {
        for (const Subset& b : m.bases())
            if (s.subset_of(b)) return true;
        return s.empty();
    };
    std::vector<Subset> out;
    for (Subset s : all_subsets(m.elements())) {
        if (s.empty() || independent(s)) continue;
        bool minimal = true;
        for (int e : s.elements())
            if (!independent(s.without(e))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// cocircuits as complements of hyperplanes: minimal sets whose removal drops
// the rank
inline std::vector<Subset> oracle_cocircuits(const Matroid& m) {
    std::vector<Subset> out;
    for (Subset s : all_subsets(m.elements())) {
        if (s.empty()) continue;
        if (m.rank_of(m.elements() - s) == m.rank()) continue;
        bool minimal = true;
        for (int e : s.elements())
            if (m.rank_of(m.elements() - s.without(e)) < m.rank()) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// flats as fixed points of closure over the full subset lattice
inline std::vector<Subset> oracle_flats(const Matroid& m) {
    std::vector<Subset> out;
    for (Subset s : all_subsets(m.elements()))
        if (m.closure(s) == s) out.push_back(s);
    std::sort(out.begin(), out.end(), [&](Subset a, Subset b) {
        int ra = m.rank_of(a), rb = m.rank_of(b);
        if (ra != rb) return ra < rb;
        return a < b;
    });
    return out;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

// exact membership of a rational point in a simplicial cone: solve for
// nonnegative barycentric coefficients over the rays
inline bool cone_contains(const std::vector<IVec>& rays, const RVec& x) {
    const int n = static_cast<int>(x.size());
    const int k = static_cast<int>(rays.size());
    if (k == 0) {
        for (const Rat& c : x)
            if (c != 0) return false;
        return true;
    }
    // row-reduce the augmented system [R | x] column by column
    RMat a(n, RVec(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = Rat(rays[j][i]);
        a[i][k] = x[i];
    }
    int row = 0;
    std::vector<int> pivot_row(k, -1);
    for (int col = 0; col < k && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i)
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[row], a[p]);
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[row][col];
            for (int j = col; j <= k; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (a[i][k] != 0) return false;  // inconsistent: x outside the span
    for (int col = 0; col < k; ++col) {
        if (pivot_row[col] < 0) return false;  // dependent rays: not a cone here
        Rat coeff = a[pivot_row[col]][k] / a[pivot_row[col]][col];
        if (coeff < 0) return false;
    }
    return true;
}

}  // namespace csmfan::testing
