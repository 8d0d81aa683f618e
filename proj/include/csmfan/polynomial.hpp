#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csmfan/numeric.hpp"

namespace csmfan {

// Dense univariate polynomial with exact integer coefficients;
// c[k] is the coefficient of t^k.
struct Poly1 {
    std::vector<Int> c;

    Poly1() = default;
    explicit Poly1(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static Poly1 constant(Int v) { return Poly1({std::move(v)}); }
    static Poly1 variable() { return Poly1({Int(0), Int(1)}); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Int(0);
    }

    Poly1 operator+(const Poly1& o) const;
    Poly1 operator-(const Poly1& o) const;
    Poly1 operator*(const Poly1& o) const;
    Poly1 operator*(const Int& s) const;
    bool operator==(const Poly1& o) const { return c == o.c; }

    // p(a + b*t)
    Poly1 compose_affine(const Int& a, const Int& b) const;

    // exact quotient by (t - root); throws InexactDivision on nonzero remainder
    Poly1 divide_exact_linear(const Int& root) const;

    std::string render(const std::string& var) const;
};

// Sparse Tutte polynomial: coefficient t_{i,j} of x^i y^j, nonzero entries only.
struct TuttePolynomial {
    std::map<std::pair<int, int>, Int> terms;

    Int coeff(int i, int j) const {
        auto it = terms.find({i, j});
        return it == terms.end() ? Int(0) : it->second;
    }
    void add(int i, int j, const Int& v) {
        if (v == 0) return;
        auto [it, fresh] = terms.try_emplace({i, j}, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) terms.erase(it);
        }
    }
    Int total() const {
        Int s = 0;
        for (const auto& [ij, v] : terms) s += v;
        return s;
    }
    // T(x, 0) as a polynomial in x
    Poly1 at_y0() const {
        std::vector<Int> c;
        for (const auto& [ij, v] : terms) {
            if (ij.second != 0) continue;
            if (ij.first >= static_cast<int>(c.size())) c.resize(ij.first + 1, Int(0));
            c[ij.first] = v;
        }
        return Poly1(std::move(c));
    }
    bool operator==(const TuttePolynomial& o) const { return terms == o.terms; }

    // e.g. "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3"
    std::string render() const;
};

}  // namespace csmfan
