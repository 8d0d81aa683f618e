#include "csmfan/activities.hpp"

namespace csmfan {

Subset fundamental_circuit(const Matroid& m, Subset basis, int e) {
    if (!m.is_basis(basis)) throw NotABasis();
    if (basis.contains(e)) throw ElementInBasis();
    Subset out;
    for (int ep : basis.with(e).elements())
        if (m.is_basis(basis.with(e).without(ep))) out = out.with(ep);
    return out;
}

Subset fundamental_cocircuit(const Matroid& m, Subset basis, int e) {
    if (!m.is_basis(basis)) throw NotABasis();
    if (!basis.contains(e)) throw ElementNotInBasis();
    Subset out;
    // replacing e by itself yields B, so e itself always qualifies
    for (int ep : (m.elements() - basis).with(e).elements())
        if (m.is_basis(basis.without(e).with(ep))) out = out.with(ep);
    return out;
}

ActivityRecord activities(const Matroid& m, Subset basis, const ElementOrder& order) {
    if (!m.is_basis(basis)) throw NotABasis();
    ActivityRecord rec;
    rec.basis = basis;
    for (int e : basis.elements())
        if (order.min_in(fundamental_cocircuit(m, basis, e)) == e)
            rec.internally_active = rec.internally_active.with(e);
    for (int e : (m.elements() - basis).elements())
        if (order.min_in(fundamental_circuit(m, basis, e)) == e)
            rec.externally_active = rec.externally_active.with(e);
    rec.internal = rec.internally_active.count();
    rec.external = rec.externally_active.count();
    return rec;
}

ActivityRecord activities(const Matroid& m, Subset basis) {
    return activities(m, basis, ElementOrder::natural(m.ground_size()));
}

TuttePolynomial tutte(const Matroid& m, const ElementOrder& order) {
    TuttePolynomial t;
    for (const Subset& b : m.bases()) {
        ActivityRecord rec = activities(m, b, order);
        t.add(rec.internal, rec.external, 1);
    }
    return t;
}

TuttePolynomial tutte(const Matroid& m) {
    return tutte(m, ElementOrder::natural(m.ground_size()));
}

std::vector<Subset> bases_with_activity(const Matroid& m, int i, int j,
                                        const ElementOrder& order) {
    std::vector<Subset> out;
    for (const Subset& b : m.bases()) {
        ActivityRecord rec = activities(m, b, order);
        if (rec.internal == i && rec.external == j) out.push_back(b);
    }
    return out;
}

std::vector<Subset> bases_with_activity(const Matroid& m, int i, int j) {
    return bases_with_activity(m, i, j, ElementOrder::natural(m.ground_size()));
}

Int beta(const Matroid& m) { return tutte(m).coeff(1, 0); }

TuttePolynomial tutte_corank_nullity(const Matroid& m) {
    const int r = m.rank();
    const int n = m.size();
    auto binom = binomial_table(std::max(r, n));
    TuttePolynomial t;
    for (Subset s : all_subsets(m.elements())) {
        const int a = r - m.rank_of(s);        // corank
        const int b = s.count() - m.rank_of(s);  // nullity
        // (x-1)^a (y-1)^b expanded term by term
        for (int i = 0; i <= a; ++i)
            for (int j = 0; j <= b; ++j)
                t.add(i, j, binom[a][i] * binom[b][j] * neg_one_pow((a - i) + (b - j)));
    }
    return t;
}

Poly1 reduced_char_poly(const Matroid& m, bool shifted) {
    if (!m.is_loopless()) throw LoopPresent();
    const Poly1 tx0 = tutte(m).at_y0();
    const Int sign = neg_one_pow(m.rank());  // (-1)^(d+1)
    if (shifted) {
        // (-1)^(d+1) T(-q, 0) / q
        return tx0.compose_affine(Int(0), Int(-1)).divide_exact_linear(Int(0)) * sign;
    }
    // (-1)^(d+1) T(1-q, 0) / (q-1)
    return tx0.compose_affine(Int(1), Int(-1)).divide_exact_linear(Int(1)) * sign;
}

}  // namespace csmfan
