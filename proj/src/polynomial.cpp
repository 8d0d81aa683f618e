#include "csmfan/polynomial.hpp"

#include <algorithm>

namespace csmfan {

Poly1 Poly1::operator+(const Poly1& o) const {
    std::vector<Int> out(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out[i] += o.c[i];
    return Poly1(std::move(out));
}

Poly1 Poly1::operator-(const Poly1& o) const {
    std::vector<Int> out(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) out[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) out[i] -= o.c[i];
    return Poly1(std::move(out));
}

Poly1 Poly1::operator*(const Poly1& o) const {
    if (is_zero() || o.is_zero()) return Poly1();
    std::vector<Int> out(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
    return Poly1(std::move(out));
}

Poly1 Poly1::operator*(const Int& s) const {
    std::vector<Int> out = c;
    for (Int& x : out) x *= s;
    return Poly1(std::move(out));
}

Poly1 Poly1::compose_affine(const Int& a, const Int& b) const {
    // Horner: p(a+bt) = c_0 + (a+bt)(c_1 + (a+bt)(...))
    Poly1 arg({a, b});
    Poly1 acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * arg + Poly1::constant(*it);
    return acc;
}

Poly1 Poly1::divide_exact_linear(const Int& root) const {
    if (is_zero()) return Poly1();
    // synthetic division by (t - root), top coefficient down
    std::vector<Int> q(c.size() - 1, Int(0));
    Int acc = 0;
    for (int k = degree(); k >= 1; --k) {
        acc = c[k] + acc * root;
        q[k - 1] = acc;
    }
    Int remainder = c[0] + acc * root;
    if (remainder != 0) throw InexactDivision();
    return Poly1(std::move(q));
}

namespace {

// renders |coeff| * var^exp, suppressing unit coefficients and exponents
std::string render_monomial(const Int& coeff, const std::string& vars) {
    Int a = abs(coeff);
    std::string out;
    if (a != 1 || vars.empty()) out += a.get_str();
    out += vars;
    return out;
}

std::string power(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

std::string Poly1::render(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& v = c[k];
        if (v == 0) continue;
        if (out.empty())
            out += (v < 0) ? "-" : "";
        else
            out += (v < 0) ? " - " : " + ";
        out += render_monomial(v, power(var, k));
    }
    return out;
}

std::string TuttePolynomial::render() const {
    if (terms.empty()) return "0";
    // descending internal degree, then ascending external degree
    std::vector<std::pair<std::pair<int, int>, Int>> order(terms.begin(), terms.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    std::string out;
    for (const auto& [ij, v] : order) {
        if (out.empty())
            out += (v < 0) ? "-" : "";
        else
            out += (v < 0) ? " - " : " + ";
        out += render_monomial(v, power("x", ij.first) + power("y", ij.second));
    }
    return out;
}

}  // namespace csmfan
