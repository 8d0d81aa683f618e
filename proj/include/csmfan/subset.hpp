#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace csmfan {

// Ground sets are {0,...,n}; everything in this library assumes n+1 <= 16.
inline constexpr int kMaxGroundSize = 16;

// Subset of a ground set, stored as a bitmask over element labels.
struct Subset {
    uint32_t bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(uint32_t b) : bits(b) {}

    static Subset of(std::initializer_list<int> elems) {
        Subset s;
        for (int e : elems) s.bits |= (1u << e);
        return s;
    }
    static constexpr Subset full(int ground_size) {
        return Subset((1u << ground_size) - 1u);
    }

    constexpr bool contains(int e) const { return (bits >> e) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    int count() const { return std::popcount(bits); }
    constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }

    constexpr Subset with(int e) const { return Subset(bits | (1u << e)); }
    constexpr Subset without(int e) const { return Subset(bits & ~(1u << e)); }
    constexpr Subset operator|(Subset o) const { return Subset(bits | o.bits); }
    constexpr Subset operator&(Subset o) const { return Subset(bits & o.bits); }
    // set difference
    constexpr Subset operator-(Subset o) const { return Subset(bits & ~o.bits); }

    // smallest element under the natural order; -1 on the empty set
    int min_element() const { return bits ? std::countr_zero(bits) : -1; }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (uint32_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        if (empty()) return "{}";
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    auto operator<=>(const Subset&) const = default;
};

// All subsets of `universe`, including the empty set and universe itself.
// Deterministic order (increasing mask value).
inline std::vector<Subset> all_subsets(Subset universe) {
    std::vector<Subset> out;
    uint32_t m = universe.bits;
    uint32_t s = 0;
    while (true) {
        out.push_back(Subset(s));
        if (s == m) break;
        s = (s - m) & m;  // next subset of m
    }
    return out;
}

// All k-element subsets of `universe`, in increasing mask order.
inline std::vector<Subset> subsets_of_size(Subset universe, int k) {
    std::vector<Subset> out;
    std::vector<int> elems = universe.elements();
    int m = static_cast<int>(elems.size());
    if (k < 0 || k > m) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Subset s;
        for (int i : idx) s = s.with(elems[i]);
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (k == 0) out = {Subset()};
    return out;
}

// Lexicographic comparison of subsets viewed as sorted element lists;
// this is the order used when serializing basis families.
inline bool lex_less(Subset a, Subset b) {
    std::vector<int> ea = a.elements(), eb = b.elements();
    return ea < eb;
}

}  // namespace csmfan
