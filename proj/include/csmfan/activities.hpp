#pragma once

#include <vector>

#include "csmfan/matroid.hpp"
#include "csmfan/order.hpp"
#include "csmfan/polynomial.hpp"

namespace csmfan {

// Activity data of one basis with respect to a total order.
struct ActivityRecord {
    Subset basis;
    int internal = 0;
    int external = 0;
    Subset internally_active;
    Subset externally_active;
};

// gamma(e;B) = { e' : B + e - e' is a basis }, for e outside B
Subset fundamental_circuit(const Matroid& m, Subset basis, int e);

// gamma*(e;B) = { e' : B + e' - e is a basis }, for e in B
Subset fundamental_cocircuit(const Matroid& m, Subset basis, int e);

ActivityRecord activities(const Matroid& m, Subset basis, const ElementOrder& order);
ActivityRecord activities(const Matroid& m, Subset basis);  // natural order

// Generating function of basis activities: t_{i,j} counts bases with
// internal activity i and external activity j.
TuttePolynomial tutte(const Matroid& m, const ElementOrder& order);
TuttePolynomial tutte(const Matroid& m);

// The stratum B_{i,j}
std::vector<Subset> bases_with_activity(const Matroid& m, int i, int j,
                                        const ElementOrder& order);
std::vector<Subset> bases_with_activity(const Matroid& m, int i, int j);

// Crapo beta invariant t_{1,0}
Int beta(const Matroid& m);

// Independent order-free cross-check:
// sum over subsets S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))
TuttePolynomial tutte_corank_nullity(const Matroid& m);

// Reduced characteristic polynomial of a loopless matroid, as a polynomial
// in q. Unshifted: chi(q)/(q-1); shifted: the same evaluated at q+1. Both
// divisions are exact and checked.
Poly1 reduced_char_poly(const Matroid& m, bool shifted);

}  // namespace csmfan
