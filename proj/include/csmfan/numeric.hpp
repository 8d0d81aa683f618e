#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "csmfan/errors.hpp"

namespace csmfan {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

// (-1)^k as an Int
inline Int neg_one_pow(int k) { return (k % 2 == 0) ? Int(1) : Int(-1); }

// Pascal triangle up to row n inclusive.
inline std::vector<std::vector<Int>> binomial_table(int n) {
    std::vector<std::vector<Int>> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        c[i].assign(i + 1, Int(0));
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : Int(0));
    }
    return c;
}

// "p" or "p/q"
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Conversion used when emitting JSON numbers; library quantities stay far
// below this at the supported ground-set sizes.
inline long long to_int64(const Int& x) {
    if (!x.fits_slong_p()) throw Error("integer too large for JSON emission");
    return static_cast<long long>(x.get_si());
}

}  // namespace csmfan
