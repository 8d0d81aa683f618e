#include "csmfan/linalg.hpp"

#include <algorithm>
#include <utility>

namespace csmfan {

Int det_int(IMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return Int(1);
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw Error("determinant of non-square matrix");

    // Bareiss fraction-free elimination; divisions are exact
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Int(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

int rank_int(const IMat& a) {
    if (a.empty() || a[0].empty()) return 0;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    RMat m(rows, RVec(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<Int> snf_invariant_factors(IMat a) {
    std::vector<Int> diag;
    if (a.empty() || a[0].empty()) return diag;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());

    auto swap_cols = [&](int x, int y) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    };

    int t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of minimal absolute value as pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        swap_cols(t, pj);

        // reduce pivot column and row; leftover remainders shrink the pivot,
        // so re-running the selection terminates
        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            Int q = a[i][t] / a[t][t];
            for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        if (!clean) continue;
        for (int j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            Int q = a[t][j] / a[t][t];
            for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;

        // divisibility: the pivot must divide every remaining entry
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i)
            for (int j = t + 1; j < cols && divides; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                    divides = false;
                }
        if (!divides) continue;

        diag.push_back(abs(a[t][t]));
        ++t;
    }
    return diag;
}

SolveOutcome solve_square(RMat a, RVec rhs) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw Error("solve of non-square matrix");
    if (static_cast<int>(rhs.size()) != n) throw Error("rhs size mismatch");

    SolveOutcome out;
    std::vector<int> col_of_row(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
            rhs[i] -= f * rhs[rank];
        }
        col_of_row[rank] = col;
        ++rank;
    }
    if (rank < n) {
        for (int i = rank; i < n; ++i)
            if (rhs[i] != 0) {
                out.kind = SolveOutcome::kInconsistent;
                return out;
            }
        out.kind = SolveOutcome::kUnderdetermined;
        return out;
    }
    out.kind = SolveOutcome::kUnique;
    out.solution.assign(n, Rat(0));
    for (int i = 0; i < n; ++i) out.solution[col_of_row[i]] = rhs[i] / a[i][col_of_row[i]];
    return out;
}

SolveOutcome solve_int_system(const IMat& a, const IVec& rhs) {
    const int n = static_cast<int>(a.size());
    SolveOutcome out;
    if (n == 0) {
        out.kind = SolveOutcome::kUnique;
        return out;
    }

    // Bareiss forward elimination on the augmented system; a missing pivot
    // means the matrix is singular and we fall back to the rational path
    // (that branch only decides consistency, so speed is irrelevant there).
    IMat m = a;
    IVec b = rhs;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) {
                RMat ra(n, RVec(n));
                RVec rb(n);
                for (int i = 0; i < n; ++i) {
                    rb[i] = Rat(rhs[i]);
                    for (int j = 0; j < n; ++j) ra[i][j] = Rat(a[i][j]);
                }
                return solve_square(std::move(ra), std::move(rb));
            }
            std::swap(m[k], m[pivot]);
            std::swap(b[k], b[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            Int numb = b[i] * m[k][k] - m[i][k] * b[k];
            mpz_divexact(b[i].get_mpz_t(), numb.get_mpz_t(), prev.get_mpz_t());
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    out.kind = SolveOutcome::kUnique;
    out.solution.assign(n, Rat(0));
    for (int i = n - 1; i >= 0; --i) {
        Rat acc(b[i]);
        for (int j = i + 1; j < n; ++j) acc -= Rat(m[i][j]) * out.solution[j];
        out.solution[i] = acc / Rat(m[i][i]);
    }
    return out;
}

bool in_rational_span(const std::vector<IVec>& vectors, const IVec& target) {
    bool target_zero = true;
    for (const Int& x : target)
        if (x != 0) {
            target_zero = false;
            break;
        }
    if (target_zero) return true;
    if (vectors.empty()) return false;

    IMat rows = vectors;
    const int r0 = rank_int(rows);
    rows.push_back(target);
    return rank_int(rows) == r0;
}

}  // namespace csmfan
