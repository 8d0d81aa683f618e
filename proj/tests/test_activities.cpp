#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"

using namespace csmfan;
using namespace csmfan::testing;

namespace {

TuttePolynomial make_tutte(std::vector<std::tuple<int, int, long>> terms) {
    TuttePolynomial t;
    for (auto [i, j, c] : terms) t.add(i, j, Int(c));
    return t;
}

}  // namespace

TEST_CASE("fundamental circuits") {
    Matroid u23 = Matroid::uniform(2, 3);
    // every single swap of {0,1}+2 stays a basis
    CHECK(fundamental_circuit(u23, Subset::of({0, 1}), 2) == Subset::of({0, 1, 2}));

    // the fundamental circuit of a loop is the loop itself
    Matroid cl = Matroid::from_bases(2, {Subset::of({0})});
    CHECK(fundamental_circuit(cl, Subset::of({0}), 1) == Subset::of({1}));

    // triangle inside K4: edges 01, 02, 12 carry labels 0, 1, 3
    Matroid m = k4();
    Subset tree = Subset::of({0, 1, 2});  // star at vertex 0 is a spanning tree
    CHECK(fundamental_circuit(m, tree, 3) == Subset::of({0, 1, 3}));

    CHECK_THROWS_AS(fundamental_circuit(u23, Subset::of({0, 1}), 0), ElementInBasis);
    CHECK_THROWS_AS(fundamental_circuit(u23, Subset::of({0}), 1), NotABasis);
}

TEST_CASE("fundamental cocircuits") {
    Matroid u23 = Matroid::uniform(2, 3);
    CHECK(fundamental_cocircuit(u23, Subset::of({0, 1}), 0) == Subset::of({0, 2}));

    // a coloop's fundamental cocircuit is just itself
    Matroid path = Matroid::from_graph(3, {{0, 1}, {1, 2}});
    CHECK(fundamental_cocircuit(path, Subset::of({0, 1}), 0) == Subset::of({0}));

    CHECK_THROWS_AS(fundamental_cocircuit(u23, Subset::of({0, 1}), 2),
                    ElementNotInBasis);
}

TEST_CASE("cocircuit-circuit duality over small corpus matroids") {
    for (const Matroid& m : corpus()) {
        if (m.size() > 5 || m.rank() == m.size()) continue;
        Matroid d = m.dual();
        for (const Subset& b : m.bases())
            for (int e : b.elements())
                CHECK(fundamental_cocircuit(m, b, e) ==
                      fundamental_circuit(d, m.elements() - b, e));
    }
}

TEST_CASE("activity records on the three-point line") {
    Matroid u23 = Matroid::uniform(2, 3);

    ActivityRecord a01 = activities(u23, Subset::of({0, 1}));
    CHECK(a01.internal == 2);
    CHECK(a01.external == 0);
    CHECK(a01.internally_active == Subset::of({0, 1}));

    ActivityRecord a02 = activities(u23, Subset::of({0, 2}));
    CHECK(a02.internal == 1);
    CHECK(a02.external == 0);
    CHECK(a02.internally_active == Subset::of({0}));

    ActivityRecord a12 = activities(u23, Subset::of({1, 2}));
    CHECK(a12.internal == 0);
    CHECK(a12.external == 1);
    CHECK(a12.externally_active == Subset::of({0}));

    // activity sets must be consistent with direct recomputation
    for (const Subset& b : u23.bases()) {
        ActivityRecord rec = activities(u23, b);
        CHECK(rec.internally_active.subset_of(rec.basis));
        CHECK((rec.externally_active & rec.basis).empty());
        for (int e : b.elements()) {
            bool active = fundamental_cocircuit(u23, b, e).min_element() == e;
            CHECK(rec.internally_active.contains(e) == active);
        }
    }

    ActivityRecord coloop = activities(Matroid::uniform(1, 1), Subset::of({0}));
    CHECK(coloop.internal == 1);
    CHECK(coloop.external == 0);
}

TEST_CASE("tutte of small matroids against frozen values") {
    CHECK(tutte(Matroid::uniform(2, 3)) == make_tutte({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
    CHECK(tutte(Matroid::uniform(1, 1)) == make_tutte({{1, 0, 1}}));
    CHECK(tutte(Matroid::uniform(1, 2)) == make_tutte({{1, 0, 1}, {0, 1, 1}}));
    // T(K4) = x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
    CHECK(tutte(k4()) == make_tutte({{3, 0, 1},
                                     {2, 0, 3},
                                     {1, 0, 2},
                                     {1, 1, 4},
                                     {0, 1, 2},
                                     {0, 2, 3},
                                     {0, 3, 1}}));
}

TEST_CASE("corank-nullity oracle on hand-expanded cases") {
    CHECK(tutte_corank_nullity(Matroid::uniform(1, 1)) == make_tutte({{1, 0, 1}}));
    CHECK(tutte_corank_nullity(Matroid::uniform(1, 2)) ==
          make_tutte({{1, 0, 1}, {0, 1, 1}}));
    CHECK(tutte_corank_nullity(Matroid::uniform(2, 3)) ==
          make_tutte({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
}

TEST_CASE("activities expansion equals corank-nullity expansion") {
    for (const Matroid& m : corpus()) {
        CAPTURE(m.name());
        CHECK(tutte(m) == tutte_corank_nullity(m));
    }
    // also on a matroid with a loop: activities are defined there too
    Matroid with_loop = Matroid::from_bases(3, {Subset::of({0, 1})});
    CHECK(tutte(with_loop) == tutte_corank_nullity(with_loop));
}

TEST_CASE("tutte is independent of the element order") {
    for (const Matroid& m : corpus()) {
        CAPTURE(m.name());
        TuttePolynomial base = tutte(m);
        if (m.size() <= 5) {
            for (const auto& p : all_permutations(m.ground_size()))
                CHECK(tutte(m, ElementOrder::from_permutation(p)) == base);
        } else {
            std::mt19937_64 rng(99);
            for (int i = 0; i < 20; ++i) {
                auto p = random_permutation(m.ground_size(), rng);
                CHECK(tutte(m, ElementOrder::from_permutation(p)) == base);
            }
        }
    }
}

TEST_CASE("basis strata") {
    Matroid u23 = Matroid::uniform(2, 3);
    CHECK(bases_with_activity(u23, 2, 0) == std::vector<Subset>{Subset::of({0, 1})});
    CHECK(bases_with_activity(u23, 1, 0) == std::vector<Subset>{Subset::of({0, 2})});
    CHECK(bases_with_activity(u23, 0, 1) == std::vector<Subset>{Subset::of({1, 2})});

    // stratum sizes sum to the basis count
    for (const Matroid& m : corpus()) {
        TuttePolynomial t = tutte(m);
        CHECK(t.total() == Int(static_cast<long>(m.bases().size())));
        for (const auto& [ij, c] : t.terms)
            CHECK(Int(static_cast<long>(
                      bases_with_activity(m, ij.first, ij.second).size())) == c);
    }
}

TEST_CASE("tutte duality and loopless shape") {
    for (const Matroid& m : corpus()) {
        CAPTURE(m.name());
        TuttePolynomial t = tutte(m);
        // unique fully internally active basis
        CHECK(t.coeff(m.rank(), 0) == 1);
        for (const auto& [ij, c] : t.terms) CHECK(ij.first <= m.rank());

        if (m.rank() < m.size()) {
            TuttePolynomial td = tutte(m.dual());
            for (const auto& [ij, c] : t.terms)
                CHECK(td.coeff(ij.second, ij.first) == c);
        }
    }
}

TEST_CASE("beta invariant") {
    CHECK(beta(Matroid::uniform(2, 3)) == 1);
    CHECK(beta(Matroid::from_bases(2, {Subset::of({0, 1})})) == 0);  // two coloops
    CHECK(beta(k4()) == 2);
    CHECK(beta(fano()) == 3);
    CHECK(beta(Matroid::uniform(1, 1)) == 1);
    CHECK(beta(direct_sum_u12_u23()) == 0);

    // beta vanishes exactly on disconnected matroids (nonempty, non-loop)
    for (const Matroid& m : corpus()) {
        CAPTURE(m.name());
        CHECK((beta(m) == 0) == !m.is_connected());
        if (m.size() >= 2 && m.rank() < m.size()) CHECK(beta(m) == beta(m.dual()));
    }
}

TEST_CASE("reduced characteristic polynomial") {
    // U(2,3): T(x,0) = x^2+x, so the shifted polynomial is q - 1
    CHECK(reduced_char_poly(Matroid::uniform(2, 3), true) ==
          Poly1({Int(-1), Int(1)}));
    // single coloop: 1
    CHECK(reduced_char_poly(Matroid::uniform(1, 1), true) == Poly1({Int(1)}));
    // K4: q^2 - 3q + 2
    CHECK(reduced_char_poly(k4(), true) == Poly1({Int(2), Int(-3), Int(1)}));
    // unshifted variants evaluated by substituting q -> q+1 must agree
    for (const Matroid& m : corpus()) {
        CAPTURE(m.name());
        Poly1 unshifted = reduced_char_poly(m, false);
        Poly1 shifted = reduced_char_poly(m, true);
        CHECK(unshifted.compose_affine(Int(1), Int(1)) == shifted);
    }

    Matroid with_loop = Matroid::from_bases(3, {Subset::of({0, 1})});
    CHECK_THROWS_AS(reduced_char_poly(with_loop, true), LoopPresent);
}

TEST_CASE("tutte rendering") {
    CHECK(tutte(Matroid::uniform(2, 3)).render() == "x^2 + x + y");
    CHECK(tutte(k4()).render() == "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3");
}

TEST_CASE("uniform matroid x-coefficients match the closed form") {
    // t_{i,0}(U(r,m)) = C(m-i-1, r-i) for 1 <= i <= r
    auto binom = binomial_table(16);
    for (int m = 1; m <= 7; ++m) {
        for (int r = 1; r <= m; ++r) {
            TuttePolynomial t = tutte(Matroid::uniform(r, m));
            for (int i = 1; i <= r; ++i) {
                CAPTURE(r);
                CAPTURE(m);
                CAPTURE(i);
                Int expected = (m == r) ? Int(i == r ? 1 : 0)
                                        : binom[m - i - 1][r - i];
                CHECK(t.coeff(i, 0) == expected);
            }
        }
    }
}

TEST_CASE("sixteen-element ground sets work at the boundary") {
    Matroid m = Matroid::uniform(2, 16);
    CHECK(m.bases().size() == 120);
    CHECK(m.rank_of(Subset::full(16)) == 2);
    CHECK(beta(m) == 14);  // C(16-1-1, 2-1) by the closed form
}

TEST_CASE("univariate polynomial arithmetic") {
    Poly1 p({Int(1), Int(0), Int(1)});  // t^2 + 1
    CHECK(p.compose_affine(Int(1), Int(-1)) == Poly1({Int(2), Int(-2), Int(1)}));
    CHECK(p.render("q") == "q^2 + 1");
    CHECK(Poly1({Int(-3), Int(0), Int(2)}).render("q") == "2q^2 - 3");

    // (t^2 - 1) / (t - 1) = t + 1, exactly
    CHECK(Poly1({Int(-1), Int(0), Int(1)}).divide_exact_linear(Int(1)) ==
          Poly1({Int(1), Int(1)}));
    // t / (t - 1) leaves remainder 1
    CHECK_THROWS_AS(Poly1({Int(0), Int(1)}).divide_exact_linear(Int(1)),
                    InexactDivision);
    CHECK((Poly1({Int(1), Int(2)}) * Poly1({Int(3), Int(4)})) ==
          Poly1({Int(3), Int(10), Int(8)}));
}
